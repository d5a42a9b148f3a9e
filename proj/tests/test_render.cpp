#include <doctest.h>

#include "hn/polygon.hpp"
#include "hn/render.hpp"
#include "test_util.hpp"

using test_util::B;

TEST_SUITE("render") {

TEST_CASE("svg carries gridlines and labeled vertices") {
  auto p = hn::polygon_of(B("O(1) + O(-1)"));
  auto q = hn::polygon_of(B("O(0)^2"));
  std::string svg = hn::render_svg({p, q}, {"O(1) + O(-1)", "O(0)^2"});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("(1, 1)") != std::string::npos);
  CHECK(svg.find("(2, 0)") != std::string::npos);
  CHECK(svg.find("O(1) + O(-1)") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("ascii plot shows axes, symbols and a legend") {
  auto p = hn::polygon_of(B("O(1) + O(-1)"));
  auto q = hn::polygon_of(B("O(0)^2"));
  std::string art = hn::render_ascii({p, q}, {"tent", "flat"});
  CHECK(art.find('*') != std::string::npos);
  CHECK(art.find('o') != std::string::npos);
  CHECK(art.find('|') != std::string::npos);
  CHECK(art.find("* = tent") != std::string::npos);
  CHECK(art.find("o = flat") != std::string::npos);
  CHECK(art.find("x: 0..2") != std::string::npos);
}

TEST_CASE("degenerate plots still render") {
  std::string art = hn::render_ascii({hn::polygon_of(B("O(0)"))}, {"unit"});
  CHECK(!art.empty());
  std::string svg = hn::render_svg({hn::HNPolygon()}, {"zero"});
  CHECK(svg.find("(0, 0)") != std::string::npos);
  CHECK_THROWS_AS(hn::render_svg({}, {}), hn::DomainError);
}

}  // TEST_SUITE
