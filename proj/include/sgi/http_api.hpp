#pragma once

#include <chrono>
#include <filesystem>

#include <httplib.h>

namespace sgi {

struct ServerConfig {
  std::filesystem::path examples_dir;
  /// Directory holding the web UI bundle; "/" serves its index.html.
  std::filesystem::path ui_dir;
  std::chrono::duration<double> timeout{60.0};
  int port = 8080;
};

/// Overrides `defaults` from SGI_PORT, SGI_TIMEOUT_SECONDS, SGI_EXAMPLES_DIR
/// and SGI_UI_DIR. Throws InvalidInput for malformed numbers.
ServerConfig config_from_environment(ServerConfig defaults);

/// POST /api/analyze, GET /api/health, GET /api/examples and GET / (the UI
/// bundle, when present). Handlers keep no state between requests.
void install_routes(httplib::Server& server, const ServerConfig& config);

}  // namespace sgi
