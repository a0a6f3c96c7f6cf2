#include "sgi/http_api.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sgi/errors.hpp"
#include "sgi/service.hpp"

namespace sgi {
namespace {

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJson);
}

Json request_error(const std::string& message) {
  return {{"status",
           {{"state", "input_error"},
            {"timed_out", false},
            {"errors", Json::array({{{"stage", "request"},
                                     {"message", message},
                                     {"input_error", true}}})}}}};
}

double parse_seconds(const char* text) {
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(v > 0)) {
    throw InvalidInput(std::string("SGI_TIMEOUT_SECONDS must be a positive number, got '") +
                       text + "'");
  }
  return v;
}

int parse_port(const char* text) {
  char* end = nullptr;
  const long v = std::strtol(text, &end, 10);
  if (end == text || *end != '\0' || v < 0 || v > 65535) {
    throw InvalidInput(std::string("SGI_PORT must be a port number, got '") + text + "'");
  }
  return static_cast<int>(v);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

ServerConfig config_from_environment(ServerConfig config) {
  if (const char* v = std::getenv("SGI_PORT")) config.port = parse_port(v);
  if (const char* v = std::getenv("SGI_TIMEOUT_SECONDS")) {
    config.timeout = std::chrono::duration<double>(parse_seconds(v));
  }
  if (const char* v = std::getenv("SGI_EXAMPLES_DIR")) config.examples_dir = v;
  if (const char* v = std::getenv("SGI_UI_DIR")) config.ui_dir = v;
  return config;
}

void install_routes(httplib::Server& server, const ServerConfig& config) {
  server.set_payload_max_length(1 << 20);

  server.Post("/api/analyze", [config](const httplib::Request& req, httplib::Response& res) {
    Json body;
    try {
      body = Json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
      reply(res, 400, request_error(std::string("body is not valid JSON: ") + e.what()));
      return;
    }
    AnalysisRequest request;
    try {
      request = parse_request(body, config.examples_dir);
    } catch (const InvalidInput& e) {
      reply(res, 400, request_error(e.what()));
      return;
    } catch (const std::invalid_argument& e) {
      reply(res, 400, request_error(e.what()));
      return;
    }
    request.timeout = config.timeout;
    const AnalysisResult result = run_analysis(request);
    reply(res, result.input_error() ? 400 : 200, result.document);
  });

  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, {{"status", "ok"}});
  });

  server.Get("/api/examples", [config](const httplib::Request&, httplib::Response& res) {
    Json list = Json::array();
    for (const auto& [name, path] : list_examples(config.examples_dir)) {
      try {
        list.push_back({{"name", name}, {"spec", Json::parse(read_text(path))}});
      } catch (const nlohmann::json::exception&) {
        // Unreadable files are not offered.
      }
    }
    reply(res, 200, {{"examples", list}});
  });

  const std::filesystem::path index = config.ui_dir / "index.html";
  if (!config.ui_dir.empty() && std::filesystem::exists(index)) {
    server.set_mount_point("/", config.ui_dir.string());
  } else {
    server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.status = 404;
      res.set_content("UI bundle not installed; the API is served under /api/\n", "text/plain");
    });
  }
}

}  // namespace sgi
