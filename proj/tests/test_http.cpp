#include <doctest.h>

#include <future>
#include <thread>

#include "helpers.hpp"
#include "sgi/http_api.hpp"
#include "sgi/service.hpp"

using namespace sgi;
using sgi::testing::read_file;
using sgi::testing::structure_path;

namespace {

/// Serves the API on an ephemeral local port for the lifetime of the object.
class TestServer {
 public:
  explicit TestServer(ServerConfig config) {
    install_routes(server_, config);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~TestServer() {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(120, 0);
    return c;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

ServerConfig test_config() {
  ServerConfig c;
  c.examples_dir = SGI_DATA_DIR "/structures";
  c.ui_dir = "/nonexistent";
  return c;
}

Json parent_spec() { return Json::parse(read_file(structure_path("parent.json"))); }

httplib::Result post(httplib::Client& cli, const Json& body) {
  return cli.Post("/api/analyze", body.dump(), "application/json");
}

}  // namespace

TEST_CASE("health endpoint") {
  TestServer server(test_config());
  auto cli = server.client();
  const auto res = cli.Get("/api/health");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(Json::parse(res->body)["status"] == "ok");
}

TEST_CASE("examples endpoint includes the parent structure") {
  TestServer server(test_config());
  auto cli = server.client();
  const auto res = cli.Get("/api/examples");
  REQUIRE(res);
  CHECK(res->status == 200);
  bool found = false;
  const Json body = Json::parse(res->body);
  for (const Json& e : body["examples"]) {
    if (e["name"] == "parent") {
      found = true;
      CHECK(e["spec"] == parent_spec());
    }
  }
  CHECK(found);
}

TEST_CASE("analyze endpoint verdicts") {
  TestServer server(test_config());
  auto cli = server.client();
  auto res = post(cli, {{"spec", parent_spec()}});
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(Json::parse(res->body)["classification"]["verdict"] == "SU");

  res = post(cli, {{"example", "parent"}, {"edits", {"C[1][1]=1"}}});
  REQUIRE(res);
  CHECK(Json::parse(res->body)["classification"]["verdict"] == "SGI");
}

TEST_CASE("malformed bodies are rejected with 400") {
  TestServer server(test_config());
  auto cli = server.client();
  auto res = cli.Post("/api/analyze", "{not json", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(Json::parse(res->body)["status"]["errors"][0]["stage"] == "request");

  Json bad = parent_spec();
  bad["A"] = Json::array({Json::array({"k01", "0"}), Json::array({"0"})});
  res = post(cli, {{"spec", bad}});
  REQUIRE(res);
  CHECK(res->status == 400);
  CHECK(Json::parse(res->body)["status"]["state"] == "input_error");

  res = post(cli, {{"spec", parent_spec()}, {"naming_mode", "greek"}});
  REQUIRE(res);
  CHECK(res->status == 400);
}

TEST_CASE("timeouts return 200 with an unknown verdict") {
  ServerConfig config = test_config();
  config.timeout = std::chrono::duration<double>(1e-9);
  TestServer server(config);
  auto cli = server.client();
  const auto res = post(cli, {{"spec", parent_spec()}});
  REQUIRE(res);
  CHECK(res->status == 200);
  const Json doc = Json::parse(res->body);
  CHECK(doc["classification"]["verdict"] == "unknown");
  CHECK(doc["status"]["timed_out"] == true);
}

TEST_CASE("concurrent requests are isolated") {
  TestServer server(test_config());
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{}, "SU"},
      {{"C[1][1]=1"}, "SGI"},
      {{"C[1][1]=1", "C[2][2]=1", "C[3][3]=0"}, "SLI"},
      {{}, "SU"},
  };
  std::vector<std::future<std::string>> verdicts;
  for (const auto& [edits, expected] : cases) {
    verdicts.push_back(std::async(std::launch::async, [&server, edits = edits] {
      auto cli = server.client();
      const auto res = post(cli, {{"example", "parent"}, {"edits", edits}});
      return res ? Json::parse(res->body)["classification"]["verdict"].get<std::string>()
                 : std::string("no response");
    }));
  }
  for (std::size_t i = 0; i < cases.size(); ++i) CHECK(verdicts[i].get() == cases[i].second);
}

TEST_CASE("root without a UI bundle says where the API is") {
  TestServer server(test_config());
  auto cli = server.client();
  const auto res = cli.Get("/");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(res->body.find("/api/") != std::string::npos);
}

TEST_CASE("root serves the UI bundle when present") {
  const auto dir = std::filesystem::temp_directory_path() / "sgi_ui_bundle_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "index.html") << "<html>workbench</html>";
  }
  ServerConfig config = test_config();
  config.ui_dir = dir;
  {
    TestServer server(config);
    auto cli = server.client();
    const auto res = cli.Get("/");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->body.find("workbench") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("environment configuration") {
  ::setenv("SGI_PORT", "9123", 1);
  ::setenv("SGI_TIMEOUT_SECONDS", "2.5", 1);
  ::setenv("SGI_EXAMPLES_DIR", "/tmp/examples", 1);
  const ServerConfig c = config_from_environment({});
  CHECK(c.port == 9123);
  CHECK(c.timeout.count() == doctest::Approx(2.5));
  CHECK(c.examples_dir == "/tmp/examples");
  ::setenv("SGI_TIMEOUT_SECONDS", "soon", 1);
  CHECK_THROWS(config_from_environment({}));
  ::unsetenv("SGI_PORT");
  ::unsetenv("SGI_TIMEOUT_SECONDS");
  ::unsetenv("SGI_EXAMPLES_DIR");
}
