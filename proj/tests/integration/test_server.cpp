#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include <gtest/gtest.h>
#include <httplib.h>

#include "http_service.hpp"
#include "integration/cli_runner.hpp"
#include "ssclaim/cola_data.hpp"
#include "ssclaim/service.hpp"
#include "ssclaim/version.hpp"

using json = nlohmann::json;
using namespace ssclaim;

namespace {

class ServerTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        state_ = new http::ServiceState;
        state_->cola_series = load_series(kDefaultColaDataPath);
        server_ = new httplib::Server;
        http::install_routes(*server_, *state_);
        port_ = server_->bind_to_any_port("127.0.0.1");
        thread_ = new std::thread([] { server_->listen_after_bind(); });
        server_->wait_until_ready();
    }

    static void TearDownTestSuite() {
        server_->stop();
        thread_->join();
        delete thread_;
        delete server_;
        delete state_;
    }

    httplib::Result post(const std::string& path, const json& body) {
        httplib::Client client("127.0.0.1", port_);
        return client.Post(path, body.dump(), "application/json");
    }

    static http::ServiceState* state_;
    static httplib::Server* server_;
    static std::thread* thread_;
    static int port_;
};

http::ServiceState* ServerTest::state_ = nullptr;
httplib::Server* ServerTest::server_ = nullptr;
std::thread* ServerTest::thread_ = nullptr;
int ServerTest::port_ = 0;

}  // namespace

// Runs first within the suite: readiness flips only after the self-test.
TEST_F(ServerTest, HealthzWaitsForSelfTest) {
    httplib::Client client("127.0.0.1", port_);
    auto before = client.Get("/healthz");
    ASSERT_TRUE(before);
    EXPECT_EQ(before->status, 503);
    EXPECT_EQ(json::parse(before->body)["status"], "starting");

    ASSERT_TRUE(http::warm_up(*state_));
    auto after = client.Get("/healthz");
    ASSERT_TRUE(after);
    EXPECT_EQ(after->status, 200);
    EXPECT_EQ(json::parse(after->body)["status"], "ok");
    EXPECT_EQ(json::parse(after->body)["version"], kVersion);
}

TEST_F(ServerTest, UnknownPathIs404) {
    httplib::Client client("127.0.0.1", port_);
    auto res = client.Get("/v1/nowhere");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 404);
    EXPECT_EQ(json::parse(res->body)["error"]["code"], "not_found");
    auto get_on_post = client.Get("/v1/critical");
    ASSERT_TRUE(get_on_post);
    EXPECT_EQ(get_on_post->status, 404);
}

TEST_F(ServerTest, Critical) {
    auto res = post("/v1/critical", {{"K", 1}, {"p", 0.08}, {"q", 0.025}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
    const auto body = json::parse(res->body);
    EXPECT_NEAR(body["result"]["n_star"].get<double>(), 34.58, 0.005);
    EXPECT_NEAR(body["result"]["r_star"].get<double>(), 0.04394, 5e-6);
}

TEST_F(ServerTest, OptimizeAtAge) {
    auto res = post("/v1/optimize", {{"mode", "at-age"}, {"n", 20}, {"r", 0.045}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_NEAR(json::parse(res->body)["result"]["K_opt"].get<double>(), 2.70, 0.02);
}

TEST_F(ServerTest, GainCurve) {
    auto res = post("/v1/gain-curve", {{"K", 1}, {"p", 0.08}, {"q", 0.025}, {"r", 0.05}});
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 200);
    for (const auto& s : json::parse(res->body)["result"]["samples"]) EXPECT_GT(s["g"].get<double>(), 0.0);
}

TEST_F(ServerTest, ValidationErrors) {
    auto res = post("/v1/gain-curve", {{"K", 0}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    const auto err = json::parse(res->body)["error"];
    EXPECT_EQ(err["message"], "K must be in (0,8]");
    EXPECT_EQ(err["field"], "K");

    httplib::Client client("127.0.0.1", port_);
    auto malformed = client.Post("/v1/breakeven", "{not json", "application/json");
    ASSERT_TRUE(malformed);
    EXPECT_EQ(malformed->status, 400);
    EXPECT_EQ(json::parse(malformed->body)["error"]["code"], "invalid_request");
}

TEST_F(ServerTest, NoBracketIs422) {
    auto res = post("/v1/critical", {{"K", 8}, {"p", 0.9}, {"q", 0}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 422);
    const auto err = json::parse(res->body)["error"];
    EXPECT_EQ(err["code"], "no_bracket");
    EXPECT_EQ(err["bracket"].size(), 2u);
}

TEST_F(ServerTest, ColaAverage) {
    auto res = post("/v1/cola-average", {{"from", 1975}, {"to", 2022}});
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 200);
    EXPECT_NEAR(json::parse(res->body)["result"]["average"].get<double>(), 0.03745, 5e-5);
    auto out_of_range = post("/v1/cola-average", {{"from", 1975}, {"to", 2030}});
    EXPECT_EQ(out_of_range->status, 400);
}

TEST_F(ServerTest, MatchesCliJson) {
    struct Case {
        std::string path;
        json body;
        std::string args;
    };
    const std::vector<Case> cases = {
        {"/v1/critical", {{"p", 0.08}, {"q", {0.0, 0.025, 0.037}}, {"K", {1, 2, 3, 4, 5, 6, 7, 8}}},
         "critical --format json"},
        {"/v1/breakeven", {{"p", 0.08}, {"q", {0.0, 0.025, 0.037}}, {"K", {1, 2, 3, 4, 5, 6, 7, 8}}},
         "breakeven --format json"},
        {"/v1/gain-curve", {{"K", 3}, {"q", 0.025}, {"r", 0.05}}, "gain-curve --K 3 --r 0.05 --format json"},
        {"/v1/optimize", {{"mode", "at-age"}, {"n", 10}, {"r", 0.045}},
         "optimize --mode at-age --n 10 --r 0.045 --format json"},
        {"/v1/optimize", {{"r", {0.05, 0.0525}}}, "optimize --r 0.05,0.0525 --format json"},
        {"/v1/cola-average", {{"from", 1983}, {"to", 2022}}, "cola --from 1983 --to 2022 --format json"},
    };
    for (const auto& c : cases) {
        auto res = post(c.path, c.body);
        ASSERT_TRUE(res) << c.path;
        ASSERT_EQ(res->status, 200) << res->body;
        auto cli = ssclaim::testing::run_cli(c.args);
        ASSERT_EQ(cli.exit_code, 0) << c.args;
        EXPECT_EQ(json::parse(res->body), json::parse(cli.out)) << c.args;
    }
}

TEST_F(ServerTest, StatelessUnderReordering) {
    const std::vector<std::pair<std::string, json>> requests = {
        {"/v1/critical", {{"K", 3}, {"q", 0.037}}},
        {"/v1/breakeven", {{"K", 5}}},
        {"/v1/optimize", {{"r", 0.0525}}},
        {"/v1/gain-curve", {{"K", 2}, {"r", 0.03}, {"n_to", 40}}},
        {"/v1/cola-average", {{"from", 1990}, {"to", 2000}}},
        {"/v1/gain-curve", {{"K", 9}, {"r", 0.03}}},
    };
    auto run_in = [&](std::vector<std::size_t> order) {
        std::vector<std::string> out(requests.size());
        for (std::size_t i : order) out[i] = post(requests[i].first, requests[i].second)->body;
        return out;
    };
    std::vector<std::size_t> order(requests.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const auto baseline = run_in(order);
    std::reverse(order.begin(), order.end());
    EXPECT_EQ(run_in(order), baseline);
    std::rotate(order.begin(), order.begin() + 2, order.end());
    EXPECT_EQ(run_in(order), baseline);
}

TEST_F(ServerTest, ConcurrentRequests) {
    std::vector<std::future<std::string>> futures;
    for (int i = 0; i < 8; ++i) {
        futures.push_back(std::async(std::launch::async, [this] {
            return post("/v1/critical", {{"K", 4}, {"q", 0.025}})->body;
        }));
    }
    const std::string first = futures[0].get();
    for (std::size_t i = 1; i < futures.size(); ++i) EXPECT_EQ(futures[i].get(), first);
}

TEST(BindAddress, Parsing) {
    auto a = http::parse_bind_address("0.0.0.0:9000");
    EXPECT_EQ(a.host, "0.0.0.0");
    EXPECT_EQ(a.port, 9000);
    auto b = http::parse_bind_address(":8181");
    EXPECT_EQ(b.host, "127.0.0.1");
    EXPECT_EQ(b.port, 8181);
    EXPECT_EQ(http::parse_bind_address("").port, 8080);
    EXPECT_THROW(http::parse_bind_address("host:http"), std::invalid_argument);
    EXPECT_THROW(http::parse_bind_address("host:70000"), std::invalid_argument);
}
