#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "vqbench/report.hpp"

using namespace vqbench;

namespace {

DeviceScores fake_scores(const std::string& name, double rt, double ac, double sc, double cap) {
  DeviceScores s;
  s.device = name;
  s.runtime = rt;
  s.accuracy = ac;
  s.scalability = sc;
  s.capacity = cap;
  s.overall = overall_score(rt, ac, sc, cap);
  return s;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("the radar chart is a well-formed SVG document") {
  const auto devices = std::vector<DeviceScores>{fake_scores("sv", 8.3, 2.8, 1.6, 5.0)};
  const std::string svg = radar_svg(devices);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  for (const char* axis : {">runtime<", ">accuracy<", ">scalability<", ">capacity<"}) {
    CHECK(svg.find(axis) != std::string::npos);
  }
  CHECK(svg.find("axis maxima") != std::string::npos);
  CHECK(svg.find("sv (overall 38.61)") != std::string::npos);
}

TEST_CASE("each device gets its own radar polygon") {
  const auto devices = std::vector<DeviceScores>{
      fake_scores("alpha", 8.0, 3.0, 2.0, 5.0),
      fake_scores("beta", 6.0, 10.0, 9.0, 12.0),
  };
  const std::string svg = radar_svg(devices);
  // Four concentric guide diamonds plus one filled shape per device.
  CHECK(count_substr(svg, "<polygon") >= 6);
  CHECK(count_substr(svg, "fill-opacity") == 2);
  CHECK(svg.find("alpha") != std::string::npos);
  CHECK(svg.find("beta") != std::string::npos);
}

TEST_CASE("device names are escaped in the markup") {
  const auto devices = std::vector<DeviceScores>{fake_scores("a<b&c", 5, 5, 5, 5)};
  const std::string radar = radar_svg(devices);
  CHECK(radar.find("a&lt;b&amp;c") != std::string::npos);
  CHECK(radar.find("a<b&c") == std::string::npos);
  const std::string bars = overall_svg(devices);
  CHECK(bars.find("a&lt;b&amp;c") != std::string::npos);
}

TEST_CASE("axis scales grow with the strongest device") {
  const auto small = std::vector<DeviceScores>{fake_scores("s", 0.5, 0.5, 0.5, 0.5)};
  const auto large = std::vector<DeviceScores>{fake_scores("l", 20, 25, 28, 14)};
  // Sub-unit scores still render against a unit axis rather than collapsing.
  CHECK(radar_svg(small).find("axis maxima: runtime 1.000") != std::string::npos);
  CHECK(radar_svg(large).find("axis maxima: runtime 20.000") != std::string::npos);
}

TEST_CASE("the overall chart draws one bar per device") {
  const auto devices = std::vector<DeviceScores>{
      fake_scores("alpha", 8.0, 3.0, 2.0, 5.0),
      fake_scores("beta", 6.0, 10.0, 9.0, 12.0),
  };
  const std::string svg = overall_svg(devices);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(count_substr(svg, "<rect") >= 2);
  CHECK(svg.find("alpha") != std::string::npos);
  CHECK(svg.find("beta") != std::string::npos);
  // Bars are labelled with the overall value they represent.
  CHECK(svg.find(detail::fmt_fixed(devices[0].overall, 2)) != std::string::npos);
  CHECK(svg.find(detail::fmt_fixed(devices[1].overall, 2)) != std::string::npos);
}

TEST_CASE("report rendering is deterministic") {
  const auto devices = std::vector<DeviceScores>{
      fake_scores("alpha", 8.0, 3.0, 2.0, 5.0),
      fake_scores("beta", 6.0, 10.0, 9.0, 12.0),
  };
  CHECK(radar_svg(devices) == radar_svg(devices));
  CHECK(overall_svg(devices) == overall_svg(devices));
}

TEST_CASE("charts refuse an empty device list") {
  CHECK_THROWS_AS(radar_svg({}), std::invalid_argument);
  CHECK_THROWS_AS(overall_svg({}), std::invalid_argument);
}
