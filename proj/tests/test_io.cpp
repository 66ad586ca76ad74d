#include "doctest.h"

#include "hk/io.hpp"

using hk::Rat;
namespace io = hk::io;

TEST_CASE("mode names") {
  CHECK(io::parse_mode("rational") == io::Mode::rational);
  CHECK(io::parse_mode("float") == io::Mode::floating);
  CHECK_THROWS_AS(io::parse_mode("exact"), hk::ParseError);
  CHECK(std::string(io::mode_name(io::Mode::floating)) == "float");
}

TEST_CASE("step specs parse in both layouts") {
  const char* full = R"({"kind":"step","base":["0","1"],
    "breakpoints":["0","1/2","1"],"values":["1","-2"],"value_at_a":"1"})";
  const auto a = io::parse_function_spec(full, io::Mode::rational);
  REQUIRE(a.step_rat.has_value());
  CHECK((*a.step_rat)(Rat(1, 4)) == Rat(1));
  CHECK((*a.step_rat)(Rat(3, 4)) == Rat(-2));
  CHECK(a.step_rat->value_at_lo() == Rat(1));

  const char* interior = R"({"kind":"step","base":[0,1],
    "breakpoints":["1/2"],"values":[1,-2]})";
  const auto b = io::parse_function_spec(interior, io::Mode::rational);
  REQUIRE(b.step_rat.has_value());
  CHECK(b.step_rat->breakpoints() == a.step_rat->breakpoints());
  CHECK(b.step_rat->value_at_lo() == Rat(0));

  const auto c = io::parse_function_spec(full, io::Mode::floating);
  REQUIRE(c.step_flt.has_value());
  CHECK((*c.step_flt)(0.75) == -2.0);

  SUBCASE("single constant piece needs no breakpoints") {
    const auto d = io::parse_function_spec(R"({"kind":"step","base":["0","2"],"values":["5"]})",
                                           io::Mode::rational);
    CHECK((*d.step_rat)(Rat(1)) == Rat(5));
  }
}

TEST_CASE("malformed specs are parse errors") {
  using io::parse_function_spec;
  const auto rational = io::Mode::rational;
  CHECK_THROWS_AS(parse_function_spec("{", rational), hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"base":[0,1]})", rational), hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"kind":"mystery"})", rational), hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"kind":"step","base":[0],"values":[1]})", rational),
                  hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(
                      R"({"kind":"step","base":[0,1],"breakpoints":["1/3","2/3"],"values":[1,2]})",
                      rational),
                  hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(
                      R"({"kind":"step","base":[0,1],"breakpoints":["0","1/2","2"],"values":[1,2]})",
                      rational),
                  hk::ParseError);
  CHECK_THROWS_AS(parse_function_spec(R"({"kind":"step","base":[0,1],"values":[]})", rational),
                  hk::ParseError);
}

TEST_CASE("antiderivative specs are float-only") {
  const char* osc = R"js({"kind":"antideriv","family":"x^p sin(x^-q)","p":2,"q":3})js";
  CHECK_THROWS_AS(io::parse_function_spec(osc, io::Mode::rational), hk::ParseError);
  const auto a = io::parse_function_spec(osc, io::Mode::floating);
  REQUIRE(a.antideriv.has_value());
  CHECK(a.antideriv->base() == hk::Interval<double>::closed(0.0, 1.0));

  const char* bad = R"js({"kind":"antideriv","family":"x^p sin(x^-q)","p":1,"q":1})js";
  CHECK_THROWS_AS(io::parse_function_spec(bad, io::Mode::floating), hk::InvalidExponents);

  const auto c = io::parse_function_spec(R"({"kind":"antideriv","family":"cos(x)/x"})",
                                         io::Mode::floating);
  REQUIRE(c.antideriv.has_value());
  CHECK(!c.antideriv->base().bounded());

  CHECK_THROWS_AS(io::parse_function_spec(R"({"kind":"antideriv","family":"exp"})",
                                          io::Mode::floating),
                  hk::ParseError);
}

TEST_CASE("config parsing and validation") {
  const auto cfg = io::parse_config(R"({"sequence":"heaviside","N":32,"mode":"float",
    "eps":["1/2"],"family":["chi"],"tol":1e-6,"window":4,"probe_depth":2,"seed":7,
    "limit":"zero"})");
  CHECK(cfg.sequence_id == "heaviside");
  CHECK(cfg.N == 32);
  CHECK(cfg.mode == io::Mode::floating);
  CHECK(cfg.tol == 1e-6);
  CHECK(cfg.window == 4);
  CHECK(cfg.seed == 7);
  CHECK(cfg.limit_id == "zero");

  CHECK_THROWS_AS(io::parse_config("not json"), hk::ParseError);
  CHECK_THROWS_AS(io::parse_config(R"({"horizon":10})"), hk::ParseError);
  CHECK_THROWS_AS(io::parse_config(R"({"N":0})"), hk::ParseError);
  CHECK_THROWS_AS(io::parse_config(R"({"tol":-1})"), hk::ParseError);
  CHECK_THROWS_AS(io::parse_config(R"({"family":[]})"), hk::ParseError);
  CHECK_THROWS_AS(io::parse_config(R"({"probe_depth":11})"), hk::ParseError);
}

TEST_CASE("canonical form and checksum are stable") {
  CHECK(io::checksum_hex("") == "cbf29ce484222325");

  const auto base = io::default_config();
  CHECK(io::config_canonical_json(base) == io::config_canonical_json(io::default_config()));
  auto changed = base;
  changed.N = 65;
  CHECK(io::checksum_hex(io::config_canonical_json(base)) !=
        io::checksum_hex(io::config_canonical_json(changed)));

  const auto manifest = io::manifest_json(base);
  CHECK(manifest.at("version") == "0.1.0");
  CHECK(manifest.at("mode") == "rational");
  CHECK(manifest.at("schedule").at("exact_zero") == true);
}

TEST_CASE("default schedule follows the mode") {
  auto cfg = io::default_config();
  CHECK(io::schedule_of(cfg).exact_zero);
  cfg.mode = io::Mode::floating;
  CHECK(!io::schedule_of(cfg).exact_zero);
}

TEST_CASE("epsilon grids parse per mode") {
  auto cfg = io::default_config();
  cfg.eps = {"1/2", "0.25"};
  const auto rats = io::eps_grid_rat(cfg);
  CHECK(rats == std::vector<Rat>{Rat(1, 2), Rat(1, 4)});
  cfg.eps = {"1/2", "1e-3"};
  const auto flts = io::eps_grid_flt(cfg);
  CHECK(flts == std::vector<double>{0.5, 1e-3});
}

TEST_CASE("sequence and limit resolution") {
  CHECK(io::sequence_by_id("typewriter", 0).id == "typewriter");
  CHECK(io::sequence_by_id("random", 9).generate(1).lo() == Rat(0));
  CHECK_THROWS_AS(io::sequence_by_id("mystery", 0), hk::ParseError);

  const auto seq = io::sequence_by_id("alternating", 0);
  CHECK(io::resolve_limit(seq, "default")(Rat(1, 2)) == Rat(-1));
  CHECK(io::resolve_limit(seq, "zero")(Rat(1, 2)) == Rat(0));
  CHECK(io::resolve_limit(seq, "g1")(Rat(1, 2)) == Rat(-1));
  CHECK_THROWS_AS(io::resolve_limit(seq, "g2"), hk::ParseError);
}

TEST_CASE("csv serialization is byte-stable") {
  hk::TrendReport r;
  r.name = "demo";
  r.mode = "rational";
  r.points = {{1, "1"}, {2, "1/2"}, {3, "1/2"}};
  CHECK(io::trend_csv(r) == "n,value\n1,1\n2,1/2\n3,1/2\n");
  CHECK(io::sanitize_name("in_measure eps=9/10") == "in_measure_eps_9_10");
  CHECK(io::sanitize_name("interval_mean probe=(0, 1)") == "interval_mean_probe__0__1");
}

TEST_CASE("trend run summary lists every series") {
  auto cfg = io::default_config();
  cfg.N = 8;
  cfg.probe_depth = 1;
  cfg.eps = {"1/2"};
  cfg.family_ids = {"chi"};
  const auto run = io::run_trend(cfg, hk::Exec::serial);
  // 1 eps + l1 + 3 probes + 3 conclusion kinds
  CHECK(run.csv_files.size() == 8);
  CHECK(run.summary.at("trends").size() == 8);
  CHECK(run.summary.at("uniform_bv").at("variation_sup") == "2");

  const auto again = io::run_trend(cfg, hk::Exec::serial);
  CHECK(run.summary.dump() == again.summary.dump());
  for (std::size_t i = 0; i < run.csv_files.size(); ++i) {
    CHECK(run.csv_files[i].first == again.csv_files[i].first);
    CHECK(run.csv_files[i].second == again.csv_files[i].second);
  }
}

TEST_CASE("verify report shape") {
  auto cfg = io::default_config();
  cfg.N = 16;
  cfg.family_ids = {"chi"};
  const auto j = io::run_verify(hk::TheoremId::T2, cfg, hk::Exec::serial);
  CHECK(j.at("theorem") == "T2");
  CHECK(j.at("ok") == true);
  CHECK(j.at("anomalies").empty());
  CHECK(j.at("conditions").size() == 2);
  CHECK(j.at("conclusions").size() == 1);
  CHECK(j.at("manifest").at("config_checksum").get<std::string>().size() == 16);
}

TEST_CASE("spec-backed family members") {
  const auto spec = io::parse_function_spec(
      R"({"kind":"step","base":["0","1"],"values":["3"]})", io::Mode::rational);
  const auto m = io::member_from_spec(spec, "custom");
  CHECK(m.id == "custom");
  REQUIRE(m.exact.has_value());
  CHECK((*m.exact)(Rat(1, 2)) == Rat(3));
  CHECK(m.flt(0.5) == 3.0);
}
