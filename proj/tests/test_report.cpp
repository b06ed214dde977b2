#include "zipfstat/report.hpp"
#include "zipfstat/monkey.hpp"
#include "zipfstat/unicode.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

using namespace zipfstat;
using nlohmann::ordered_json;

namespace {

RankedDistribution small_dist() {
    FrequencyTable t;
    t.label = "demo";
    t.add("alpha", 40);
    t.add("beta", 20);
    t.add("gamma", 10);
    t.add("delta", 5);
    t.add("epsilon", 5);
    t.add("zeta", 2);
    t.add("eta", 1);
    t.add("theta", 1);
    t.add("iota", 1);
    t.add("kappa", 1);
    t.add("lambda", 1);
    t.add("mu", 1);
    return rank(t);
}

PlotSpec small_spec() {
    PlotSpec spec;
    spec.title = "demo plot";
    spec.series.push_back(series_from(small_dist()));
    spec.overlays.push_back({"alpha=1.00", 1.0, 1.7, 1, 12});
    spec.rules.push_back({"break r=5", 5});
    return spec;
}

} // namespace

TEST_CASE("sha256 matches the published test vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("sha256_file hashes file bytes") {
    testutil::TempDir tmp("sha");
    testutil::spit(tmp.file("a.bin"), "abc");
    CHECK(sha256_file(tmp.file("a.bin")) == sha256_hex("abc"));
    CHECK_THROWS_AS(sha256_file(tmp.file("missing.bin")), DataError);
}

TEST_CASE("report_envelope carries the schema header") {
    const auto j = report_envelope("fit");
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("tool") == "zipfstat");
    CHECK(j.at("tool_version") == kToolVersion);
    CHECK(j.at("kind") == "fit");
    // ISO 8601 UTC: 2026-08-22T12:34:56Z
    const auto ts = j.at("generated_at").get<std::string>();
    CHECK(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');

    const auto quiet = report_envelope("fit", {false});
    CHECK_FALSE(quiet.contains("generated_at"));
}

TEST_CASE("to_json covers every field") {
    ScalingFit fit{1.05, 2.5, 0.003, 0.99, {10, 1000}, 991};
    auto j = to_json(fit);
    CHECK(j.at("alpha") == 1.05);
    CHECK(j.at("intercept") == 2.5);
    CHECK(j.at("stderr_alpha") == 0.003);
    CHECK(j.at("r_squared") == 0.99);
    CHECK(j.at("window").at("r_min") == 10);
    CHECK(j.at("window").at("r_max") == 1000);
    CHECK(j.at("n_points") == 991);

    PiecewiseFit pw{5000, 1.0, 1.6, 3.0, 5.1, 0.02, 0.11, {10, 20000}, 19991};
    auto pj = to_json(pw);
    CHECK(pj.at("breakpoint_rank") == 5000);
    CHECK(pj.at("alpha_low") == 1.0);
    CHECK(pj.at("alpha_high") == 1.6);
    CHECK(pj.at("intercept_low") == 3.0);
    CHECK(pj.at("intercept_high") == 5.1);
    CHECK(pj.at("sse") == 0.02);
    CHECK(pj.at("improvement_ratio") == 0.11);

    DivergenceReport div;
    auto dj = to_json(div);
    CHECK(dj.at("divergence_rank").is_null());
    CHECK(dj.at("direction") == "none");
    div.divergence_rank = 6675;
    div.direction = Divergence::b_decays_faster;
    dj = to_json(div);
    CHECK(dj.at("divergence_rank") == 6675);
    CHECK(dj.at("direction") == "b_decays_faster");
    CHECK(dj.at("threshold") == 0.1);
    CHECK(dj.at("sustain_length") == 50);

    const auto dist = small_dist();
    auto ij = distribution_info(dist);
    CHECK(ij.at("label") == "demo");
    CHECK(ij.at("tokens") == 88);
    CHECK(ij.at("vocabulary") == 12);
    CHECK(ij.at("normalized") == false);
}

TEST_CASE("series_from keeps the head and thins the tail") {
    const auto full = monkey_corpus({26, 0.25, 5}, 300000);
    const auto dist = rank(full);
    REQUIRE(dist.points.size() > 20000);
    const auto series = series_from(dist);
    CHECK(series.label == dist.label);

    // every rank up to 100 survives
    std::size_t head = 0;
    for (const auto& [x, y] : series.points)
        if (x <= 100.0) ++head;
    CHECK(head == 100);
    // past rank 100 the density drops to about 256 points per decade
    const double decades = std::log10(static_cast<double>(dist.points.size())) - 2.0;
    const double tail = static_cast<double>(series.points.size() - head);
    CHECK(tail < 260.0 * decades + 10);
    CHECK(tail > 200.0 * decades - 10);
    // order and values preserved
    for (std::size_t i = 1; i < series.points.size(); ++i)
        CHECK(series.points[i - 1].first < series.points[i].first);
}

TEST_CASE("render_svg is deterministic and well-formed") {
    const auto spec = small_spec();
    const auto svg = render_svg(spec);
    CHECK(render_svg(spec) == svg);  // byte-identical on a second call

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 720 540\"") != std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    CHECK(svg.find("demo plot") != std::string::npos);
    CHECK(svg.find("demo") != std::string::npos);            // legend label
    CHECK(svg.find("alpha=1.00") != std::string::npos);      // overlay label
    CHECK(svg.find("break r=5") != std::string::npos);       // rule label
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    // log-axis decade ticks as powers of ten
    CHECK(svg.find("10<tspan") != std::string::npos);
    // no timestamps anywhere: rendering twice a second apart is still equal
    CHECK(svg.find("generated") == std::string::npos);
}

TEST_CASE("render_svg escapes markup in labels") {
    PlotSpec spec;
    spec.title = "a < b & \"c\"";
    auto series = series_from(small_dist());
    series.label = "x<y>&z";
    spec.series.push_back(series);
    const auto svg = render_svg(spec);
    CHECK(svg.find("a &lt; b &amp; &quot;c&quot;") != std::string::npos);
    CHECK(svg.find("x&lt;y&gt;&amp;z") != std::string::npos);
    CHECK(svg.find("x<y") == std::string::npos);
}

TEST_CASE("render_svg error paths") {
    PlotSpec empty;
    CHECK_THROWS_AS(render_svg(empty), DataError);

    PlotSpec nonpositive;
    nonpositive.series.push_back({"bad", {{0.0, 1.0}, {1.0, 2.0}}});
    nonpositive.log_axes = true;
    CHECK_THROWS_AS(render_svg(nonpositive), DataError);
    nonpositive.log_axes = false;  // linear axes accept zero
    CHECK_NOTHROW(render_svg(nonpositive));
}

TEST_CASE("render_gnuplot emits a runnable script shape") {
    const auto spec = small_spec();
    const auto gp = render_gnuplot(spec);
    CHECK(render_gnuplot(spec) == gp);

    CHECK(gp.find("set title \"demo plot\"") != std::string::npos);
    CHECK(gp.find("set logscale xy") != std::string::npos);
    CHECK(gp.find("$data0 << EOD") != std::string::npos);
    CHECK(gp.find("\nEOD\n") != std::string::npos);
    CHECK(gp.find("f0(x) = 10**(1.7) * x**(-1)") != std::string::npos);
    CHECK(gp.find("set arrow 1 from 5, graph 0 to 5, graph 1 nohead dashtype 2") !=
          std::string::npos);
    CHECK(gp.find("plot $data0 using 1:2 with points") != std::string::npos);
    CHECK(gp.find("title \"demo\"") != std::string::npos);
    CHECK(gp.find("f0(x) with lines dashtype 2") != std::string::npos);

    PlotSpec quoted = spec;
    quoted.title = "say \"hi\"";
    CHECK(render_gnuplot(quoted).find("set title \"say \\\"hi\\\"\"") != std::string::npos);

    PlotSpec empty;
    CHECK_THROWS_AS(render_gnuplot(empty), DataError);
}

TEST_CASE("gnuplot accepts the generated script when installed") {
    if (std::system("command -v gnuplot >/dev/null 2>&1") != 0) {
        MESSAGE("gnuplot not installed; script syntax unchecked on this machine");
        return;
    }
    testutil::TempDir tmp("gp");
    auto spec = small_spec();
    const auto script =
        "set terminal svg size 720,540\nset output '" +
        tmp.file("out.svg").string() + "'\n" + render_gnuplot(spec);
    testutil::spit(tmp.file("plot.gp"), script);
    const std::string cmd = "gnuplot " + tmp.file("plot.gp").string() + " 2>/dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::file_size(tmp.file("out.svg")) > 500);
}
