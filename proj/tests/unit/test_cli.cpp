#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "commands.hpp"
#include "test_support.hpp"
#include "umbral/io.hpp"

using namespace umbral;
using cli::RunConfig;
using testing::Q;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("umbral-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write_file(const std::string& name, const std::string& text)
{
    const auto path = scratch(name);
    std::ofstream(path) << text;
    return path;
}

RunConfig legendre_check()
{
    RunConfig cfg;
    cfg.command = "check";
    cfg.family = "classical";
    cfg.xi = {"1", "-1", "0"};
    cfg.eta = {"2", "-1"};
    cfg.depth = 10;
    return cfg;
}

std::string legendre_moments_json(std::size_t count)
{
    std::string text = "[";
    for (std::size_t n = 0; n < count; ++n)
        text += (n ? ", \"1/" : "\"1/") + std::to_string(n + 1) + "\"";
    return text + "]";
}

} // namespace

TEST_CASE("scalar JSON round trip")
{
    CHECK(to_json(Q(8, 9)) == json("8/9"));
    CHECK(to_json(Q(-3)) == json("-3"));
    CHECK(to_json(Scalar::floating(1.5, -2.0)) == json::array({1.5, -2.0}));
    CHECK(scalar_from_json(json("8/9"), Mode::exact) == Q(8, 9));
    CHECK(scalar_from_json(json(0.25), Mode::exact) == Q(1, 4));
    CHECK(scalar_from_json(json(3), Mode::exact) == Q(3));
    CHECK(scalar_from_json(json::array({1.0, 2.0}), Mode::floating) == Scalar::floating(1.0, 2.0));
    CHECK(csv_cell(Q(-1, 2)) == "-1/2");
}

TEST_CASE("scalar lists from JSON or CSV")
{
    const auto a = parse_scalar_list("[\"1\", \"1/2\", 0.25]", Mode::exact);
    REQUIRE(a.size() == 3);
    CHECK(a[2] == Q(1, 4));
    const auto b = parse_scalar_list("# moments\n1\n\n1/2\n2,1/3,\n", Mode::exact);
    REQUIRE(b.size() == 3);
    CHECK(b[2] == Q(1, 3));
    CHECK_THROWS_AS(parse_scalar_list("# nothing\n", Mode::exact), InsufficientData);
}

TEST_CASE("polynomial system JSON layout")
{
    const auto g = MomentSequence::from_rule(Mode::exact, [](std::size_t n) { return Q(1, static_cast<long>(n) + 1); });
    const auto j = to_json(monic_ops_from_moments(g, 2));
    CHECK(j["b"][0] == "1/2");
    CHECK(j["u"][0] == "1/12");
    CHECK(j["polys"][2] == json::array({"1/6", "-1", "1"}));
    CHECK(j.contains("h"));
}

TEST_CASE("family command: rational family")
{
    RunConfig cfg;
    cfg.command = "family";
    cfg.family = "krall";
    cfg.alpha = "2";
    cfg.beta = "3";
    cfg.depth = 8;
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_pass);
    CHECK(res.report["moments"][1] == "8/9");
    CHECK(res.report["mu"][1] == "1/3");
    CHECK(res.report["recurrence"]["b"][0] == "8/9");
    CHECK(res.report["moments"].size() == 17);
    const auto parsed = json::parse(res.text);
    CHECK(parsed["moments"][1] == "8/9");
}

TEST_CASE("family command: classical table")
{
    RunConfig cfg;
    cfg.command = "family";
    cfg.family = "classical";
    cfg.xi = {"1", "-1", "0"};
    cfg.eta = {"2", "-1"};
    cfg.depth = 4;
    cfg.format = "csv";
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_pass);
    CHECK(res.text.rfind("quantity,n,k,value\n", 0) == 0);
    CHECK(res.text.find("g,3,,1/4\n") != std::string::npos);
    CHECK(res.text.find("P,2,0,1/6\n") != std::string::npos);
    CHECK(res.report["moments"][0] == "1");
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(res.report["moments"][n] == "1/" + std::to_string(n + 1));
}

TEST_CASE("invalid configurations exit with the input error code")
{
    RunConfig cfg;
    cfg.command = "family";
    cfg.family = "krall";
    cfg.alpha = "2";
    cfg.beta = "3";
    cfg.depth = 0;
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);
    cfg.depth = 4;
    cfg.format = "xml";
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);
    cfg.format = "json";
    cfg.tol = -1.0;
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);
    cfg.tol.reset();
    cfg.beta = "2";
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_invalid);
    CHECK(res.message.find("β != α") != std::string::npos);
}

TEST_CASE("check command: Legendre instance")
{
    const auto res = cli::run(legendre_check());
    CHECK(res.exit_code == cli::exit_pass);
    CHECK(res.report["verdict"] == true);
    CHECK(res.report["band_width"] == 1);
    CHECK(res.report["max_residual"] == "0");
    CHECK(res.report["eigen"]["pass"] == true);
    CHECK(res.report["eigen"]["lambda"].size() >= 11);
    CHECK(res.report["local"]["mu_recurrence"] == json::array({"1", "-2", "1"}));
    CHECK(res.report["local"]["christoffel"]["consistent"] == true);
    CHECK(res.report["symmetry"]["pass"] == true);
}

TEST_CASE("check command: unit mu falsifies")
{
    const auto moments = write_file("legendre.json", legendre_moments_json(30));
    const auto mu = write_file("unit_mu.csv", "0\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n");
    RunConfig cfg;
    cfg.command = "check";
    cfg.moments_file = moments.string();
    cfg.mu_file = mu.string();
    cfg.depth = 4;
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_falsified);
    CHECK(res.report["verdict"] == false);
    CHECK(res.report["failing_cell"].is_array());
    CHECK(res.message.find("failing cell") != std::string::npos);
}

TEST_CASE("check command: perturbations falsify")
{
    auto cfg = legendre_check();
    cfg.perturb_mu = "3:1/7";
    CHECK(cli::run(cfg).exit_code == cli::exit_falsified);

    cfg = legendre_check();
    cfg.perturb_g = "4:1/1000";
    CHECK(cli::run(cfg).exit_code == cli::exit_falsified);

    cfg = legendre_check();
    cfg.perturb_r = "4,3:1";
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_falsified);
    CHECK(res.report["failing_cell"][0] == 4);

    cfg = legendre_check();
    cfg.perturb_r = "garbage";
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);
}

TEST_CASE("check command: degenerate moments")
{
    const auto zero = write_file("zero.json", "[\"0\", \"1\", \"1/2\", \"1/3\"]");
    RunConfig cfg;
    cfg.command = "check";
    cfg.moments_file = zero.string();
    cfg.depth = 1;
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);

    const auto singular = write_file("singular.csv", "1\n0\n0\n0\n0\n0\n0\n0\n");
    cfg.moments_file = singular.string();
    CHECK(cli::run(cfg).exit_code == cli::exit_invalid);
}

TEST_CASE("check command writes the report file")
{
    auto cfg = legendre_check();
    cfg.depth = 4;
    cfg.out = scratch("report.json").string();
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_pass);
    std::ifstream in(cfg.out);
    const auto j = json::parse(in);
    CHECK(j["verdict"] == true);

    cfg.format = "csv";
    cfg.out.clear();
    const auto csv = cli::run(cfg);
    CHECK(csv.text.find("verdict,true\n") != std::string::npos);
    CHECK(csv.text.find("band_width,1\n") != std::string::npos);
}

TEST_CASE("check reports are deterministic")
{
    auto cfg = legendre_check();
    cfg.depth = 6;
    CHECK(cli::run(cfg).text == cli::run(cfg).text);
}

TEST_CASE("elliptic verify")
{
    RunConfig cfg;
    cfg.command = "elliptic";
    cfg.depth = 8;
    cfg.tol = 1e-10;
    const auto res = cli::run(cfg);
    CHECK(res.exit_code == cli::exit_pass);
    CHECK(res.report["identities"]["red_mu_c"].get<double>() < 1e-10);
    CHECK(res.report["three_way"]["hankel_vs_formula"].get<double>() < 1e-8);
    CHECK(res.report["shift"]["max_residual"].get<double>() < 1e-8);

    RunConfig flat = cfg;
    flat.g2 = "0";
    flat.g3 = "0";
    flat.w = "1";
    flat.alpha = "2";
    flat.beta = "3";
    const auto exact = cli::run(flat);
    CHECK(exact.exit_code == cli::exit_pass);
    CHECK(exact.report["mode"] == "exact");
    CHECK(exact.report["recurrence"]["b"][0] == "8/9");

    RunConfig same = cfg;
    same.alpha = "0.5";
    same.beta = "0.5";
    CHECK(cli::run(same).exit_code == cli::exit_invalid);

    RunConfig far = cfg;
    far.w = "0.9";
    CHECK(cli::run(far).exit_code == cli::exit_convergence);
}
