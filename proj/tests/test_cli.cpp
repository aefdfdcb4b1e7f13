#include <catch2/catch_amalgamated.hpp>

#include <clusterpic/cli.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace clusterpic;
using Catch::Approx;

namespace {

struct CliResult {
    int status = -1;
    std::string out, err;
    Json json;  // parsed stdout when it is JSON
};

CliResult cli(std::vector<std::string> args, bool parse_json = true) {
    std::ostringstream out, err;
    CliResult r;
    r.status = run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    if (parse_json) r.json = Json::parse(r.out);
    return r;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("cli: envelope, roots payload, and JSON round-trip") {
    CliResult r = cli({"roots", "--quiver", "A1:"});
    REQUIRE(r.status == 0);
    REQUIRE(r.err.empty());
    CHECK(r.json["schema"] == "clusterpic/1");
    CHECK(r.json["command"] == "roots");
    CHECK(r.json["roots"] == Json::parse("[[1]]"));
    CHECK(r.json["names"] == Json::parse("[\"S1\"]"));
    CHECK(r.out.back() == '\n');
    // round-trip: parse -> dump -> parse is the identity
    CHECK(Json::parse(r.json.dump()) == r.json);

    CliResult a3 = cli({"roots", "--quiver", "A3: 1>2>3"});
    REQUIRE(a3.status == 0);
    CHECK(a3.json["roots"].size() == 6);
    CHECK(Json::parse(a3.json.dump()) == a3.json);
}

TEST_CASE("cli: cluster counts and the compact quiver grammar") {
    CliResult r = cli({"clusters", "--quiver", "A3:1<2<3"});
    REQUIRE(r.status == 0);
    CHECK(r.json["count"] == 14);
    CHECK(r.json["clusters"].size() == 14);
    for (const Json& c : r.json["clusters"]) CHECK(c.size() == 3);

    CHECK(cli({"clusters", "--quiver", "A2: 1>2"}).json["count"] == 5);
    CHECK(cli({"clusters", "--quiver", "B2: 1<(1,2)2"}).json["count"] == 6);
    CHECK(cli({"clusters", "--quiver", "G2: 1<(1,3)2"}).json["count"] == 8);
}

TEST_CASE("cli: homology goldens including the flat torsion array") {
    CliResult a4 = cli({"homology", "--quiver", "A4:1<2<3<4"});
    REQUIRE(a4.status == 0);
    CHECK(a4.json["betti"] == Json::parse("[1,4,5,0,0]"));
    CHECK(a4.json["torsion"] == Json::array());
    CHECK(a4.json["euler_characteristic"] == 1 - 4 + 5);

    CliResult a3 = cli({"homology", "--quiver", "A3: 1<2<3"});
    CHECK(a3.json["betti"] == Json::parse("[1,3,2,0]"));
    CHECK(a3.json["torsion"] == Json::array());
    CHECK(a3.json["basis_sizes"] == Json::parse("[14,49,49,14]"));
}

TEST_CASE("cli: wide subcommand with and without a point") {
    CliResult all = cli({"wide", "--quiver", "A2: 1>2"});
    REQUIRE(all.status == 0);
    CHECK(all.json["count"] == 5);  // 0, three rank-1, mod

    CliResult at = cli({"wide", "--quiver", "A3: 1>2>3", "--point", "1,-1,0"});
    REQUIRE(at.status == 0);
    CHECK(at.json["point"] == Json::parse("[1,-1,0]"));
    CHECK(at.json["wide"]["names"] == Json::parse("[\"S3\",\"I2\",\"P1\"]"));
    CHECK(at.json["wide"]["rank"] == 2);
}

TEST_CASE("cli: exc-seq list/validate agree (metamorphic swaps)") {
    Model m = build_model("A3: 1>2>3");
    Wide full = full_wide(m);
    CliResult list = cli({"exc-seq", "--quiver", "A3: 1>2>3"});
    REQUIRE(list.status == 0);
    REQUIRE(list.json["count"].get<int>() > 0);

    int swaps_rejected = 0, swaps_accepted = 0;
    for (const Json& seq : list.json["sequences"]) {
        std::vector<std::string> names = seq.get<std::vector<std::string>>();
        auto joined = [&](const std::vector<std::string>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
            return s;
        };
        CliResult ok = cli({"exc-seq", "--quiver", "A3: 1>2>3", "--validate", joined(names)});
        REQUIRE(ok.status == 0);
        CHECK(ok.json["valid"] == true);

        // swap two adjacent terms; the CLI verdict must match the predicate
        for (size_t i = 0; i + 1 < names.size(); ++i) {
            std::vector<std::string> mut = names;
            std::swap(mut[i], mut[i + 1]);
            CliResult sw =
                cli({"exc-seq", "--quiver", "A3: 1>2>3", "--validate", joined(mut)});
            REQUIRE(sw.status == 0);
            Sequence s = detail::parse_sequence(m, joined(mut));
            bool expect = check_signed_sequence(m, full, s).ok;
            CHECK(sw.json["valid"] == expect);
            (expect ? swaps_accepted : swaps_rejected)++;
        }
    }
    CHECK(swaps_rejected > 0);  // the metamorphic test must actually reject something
    CHECK(swaps_accepted > 0);  // commuting pairs swap legally
}

TEST_CASE("cli: signed-exc-seq counts and shift rejection in exc-seq") {
    CHECK(cli({"signed-exc-seq", "--quiver", "A2: 1>2"}).json["count"] == 10);
    CHECK(cli({"exc-seq", "--quiver", "A2: 1>2"}).json["count"] == 3);

    CliResult bad =
        cli({"exc-seq", "--quiver", "A2: 1>2", "--validate", "S2[1],P1"});
    CHECK(bad.status == 1);
    CHECK(bad.json["error"]["kind"] == "invalid_argument");

    CliResult good =
        cli({"signed-exc-seq", "--quiver", "A2: 1>2", "--validate", "S2[1],P1"});
    REQUIRE(good.status == 0);
    CHECK(good.json["valid"] == true);

    CliResult complete =
        cli({"signed-exc-seq", "--quiver", "A3: 1>2>3", "--complete", "S3,P1"});
    REQUIRE(complete.status == 0);
    for (const Json& s : complete.json["completions"]) {
        REQUIRE(s.size() == 3);
        CHECK(s[1] == "S3");
        CHECK(s[2] == "P1");
    }
    CHECK(complete.json["completions"].size() > 0);
}

TEST_CASE("cli: compose and braid round-trip") {
    CliResult comp =
        cli({"compose", "--quiver", "A3: 1>2>3", "--first", "S3", "--then", "I2"});
    REQUIRE(comp.status == 0);
    CHECK(comp.json["composite"]["rank"] == 2);
    CHECK(comp.json["first"]["codomain"] == comp.json["then"]["domain"]);
    CHECK(comp.json["composite"]["domain"] == comp.json["first"]["domain"]);
    CHECK(comp.json["composite"]["codomain"] == comp.json["then"]["codomain"]);

    CliResult fwd =
        cli({"braid", "--quiver", "A2: 1>2", "--seq", "S1,S2", "--pos", "1", "--dir", "-1"});
    REQUIRE(fwd.status == 0);
    CHECK(fwd.json["result"] == Json::parse("[\"S2\",\"P1\"]"));
    CliResult back =
        cli({"braid", "--quiver", "A2: 1>2", "--seq", "S2,P1", "--pos", "1", "--dir", "1"});
    REQUIRE(back.status == 0);
    CHECK(back.json["result"] == Json::parse("[\"S1\",\"S2\"]"));

    // the braid move is partial: undefined spots report an error, not a crash
    CliResult undef =
        cli({"braid", "--quiver", "A3: 1>2>3", "--seq", "S3,P1,S1", "--pos", "1", "--dir",
             "-1"});
    CHECK(undef.status == 1);
    CHECK(undef.json["error"]["kind"] == "invariant_violation");
}

TEST_CASE("cli: picture-group emits the B2 hexagon") {
    CliResult r = cli({"picture-group", "--quiver", "B2: 1>(2,1)2"});
    REQUIRE(r.status == 0);
    const Json& p = r.json["presentation"];
    CHECK(p["generators"].size() == 4);
    CHECK(p["abelianization_rank"] == 3);
    std::vector<std::string> displays;
    for (const Json& rel : p["relations"]) displays.push_back(rel["display"]);
    REQUIRE(displays.size() == 1);
    CHECK(displays[0] == "x[S1]^-1 x[S2] x[P1] x[I2] x[S1] x[S2]^-1");
}

TEST_CASE("cli: torsion lattice and single-point queries") {
    CliResult hasse = cli({"torsion", "--quiver", "A2: 1>2"});
    REQUIRE(hasse.status == 0);
    CHECK(hasse.json["hasse"]["classes"].size() == 5);
    CHECK(hasse.json["hasse"]["edges"].size() == 5);

    CliResult pt = cli({"torsion", "--quiver", "A2: 1>2", "--point", "2,-1"});
    REQUIRE(pt.status == 0);
    CHECK(pt.json["class"]["display"] == "{S1,P1}");
    CHECK(pt.json["class"]["members"] == Json::parse("[\"S1\",\"P1\"]"));

    CliResult wall = cli({"torsion", "--quiver", "A2: 1>2", "--point", "0,1"});
    CHECK(wall.status == 1);
    CHECK(wall.json["error"]["kind"] == "ambiguous_point");
}

TEST_CASE("cli: fan output is labeled and consistent") {
    CliResult r = cli({"fan", "--quiver", "A2: 1>2"});
    REQUIRE(r.status == 0);
    const Json& fan = r.json["fan"];
    CHECK(fan["rank"] == 2);
    CHECK(fan["chambers"].size() == 5);
    CHECK(fan["facets"].size() == 5);
    std::set<std::string> bricks;
    for (const Json& ft : fan["facets"]) bricks.insert(ft["brick"].get<std::string>());
    CHECK(bricks == std::set<std::string>{"S1", "S2", "P1"});
}

TEST_CASE("cli: errors are machine-readable with documented exit codes") {
    CliResult parse = cli({"roots", "--quiver", "Z9: bogus"});
    CHECK(parse.status == 1);
    CHECK(parse.json["error"]["kind"] == "parse_error");
    REQUIRE(parse.json["error"]["message"].is_string());

    CliResult usage = cli({"frobnicate", "--quiver", "A1:"});
    CHECK(usage.status == 2);
    CHECK(usage.json["error"]["kind"] == "usage");

    CliResult missing = cli({"clusters"});
    CHECK(missing.status == 2);
    CHECK(missing.json["error"]["kind"] == "usage");

    CliResult badname = cli({"exc-seq", "--quiver", "A2: 1>2", "--validate", "S9"});
    CHECK(badname.status == 1);
    CHECK(badname.json["error"]["kind"] == "invalid_argument");

    CliResult badfield = cli({"clusters", "--quiver", "A2: 1>2", "--field-order", "4"});
    CHECK(badfield.status == 1);
    CHECK(badfield.json["error"]["kind"] == "invalid_argument");

    CliResult help = cli({"--help"}, false);
    CHECK(help.status == 0);
    CHECK(help.out.find("Usage: clusterpic") != std::string::npos);
    CHECK(help.out.find("picture-group") != std::string::npos);
}

TEST_CASE("cli: --field-order changes the oracle, not the answers") {
    for (const char* p : {"2", "3", "5"}) {
        CliResult r = cli({"torsion", "--quiver", "A3: 1<2<3", "--field-order", p});
        REQUIRE(r.status == 0);
        CHECK(r.json["hasse"]["classes"].size() == 14);
        CHECK(r.json["hasse"]["edges"].size() == 21);
    }
}

TEST_CASE("render: rank-3 wall arcs have the documented angular extents") {
    Model m = build_model("A3: 1<2<3");
    auto arc_of = [&](const DimVec& d) { return wall_arc3(m, m.root_id(d)); };

    for (const DimVec& simple : {DimVec{1, 0, 0}, DimVec{0, 1, 0}, DimVec{0, 0, 1}}) {
        WallArc a = arc_of(simple);
        CHECK(a.full);
        CHECK(a.half == Approx(kPi));
    }
    // D(P2) is cut to a half-circle by its unique proper submodule
    WallArc p2 = arc_of({1, 1, 0});
    CHECK_FALSE(p2.full);
    CHECK(2 * p2.half == Approx(kPi));
    WallArc i2 = arc_of({0, 1, 1});
    CHECK_FALSE(i2.full);
    CHECK(2 * i2.half == Approx(kPi));
    // D(P3) is cut by two submodule half-planes meeting at 60 degrees
    WallArc p3 = arc_of({1, 1, 1});
    CHECK_FALSE(p3.full);
    CHECK(2 * p3.half == Approx(2 * kPi / 3));

    // every arc point satisfies its own wall equation and inequalities
    SemiInvariantDomain dom = domain(m, {1, 1, 1}, default_field_order());
    for (int k = 0; k <= 8; ++k) {
        double t = p3.mid - p3.half + 2 * p3.half * k / 8.0;
        std::array<double, 3> x{p3.u[0] * std::cos(t) + p3.v[0] * std::sin(t),
                                p3.u[1] * std::cos(t) + p3.v[1] * std::sin(t),
                                p3.u[2] * std::cos(t) + p3.v[2] * std::sin(t)};
        CHECK(std::abs(x[0] + x[1] + x[2]) < 1e-9);
        for (const DimVec& s : dom.halfspace_normals) {
            double v = s[0] * x[0] + s[1] * x[1] + s[2] * x[2];
            CHECK(v <= 1e-9);
        }
    }
}

TEST_CASE("render: D(P3) has exactly the documented inequality set") {
    Model m = build_model("A3: 1<2<3");
    SemiInvariantDomain d = domain(m, {1, 1, 1}, default_field_order());
    CHECK(d.m == DimVec{1, 1, 1});
    REQUIRE(d.halfspace_normals.size() == 2);
    CHECK(d.halfspace_normals[0] == DimVec{1, 0, 0});
    CHECK(d.halfspace_normals[1] == DimVec{1, 1, 0});
}

TEST_CASE("render: B2 picture has four labeled walls on the right sides") {
    Model m = build_model("B2: 1<(1,2)2");
    Drawing d = make_drawing(m, RenderSpec{});
    REQUIRE(d.rank == 2);
    REQUIRE(d.walls.size() == 4);

    std::set<std::string> labels;
    std::map<std::string, const WallPath*> by_label;
    for (const WallPath& w : d.walls) {
        labels.insert(w.label);
        by_label[w.label] = &w;
        REQUIRE(w.points.size() == 2);
    }
    CHECK(labels ==
          std::set<std::string>{"D(S1)", "D(S2)", "D(I1)", "D(P2)"});

    // simples span full lines through the origin; the non-simples are rays
    auto is_ray = [](const WallPath& w) {
        return std::hypot(w.points[0][0], w.points[0][1]) < 1e-12;
    };
    CHECK_FALSE(is_ray(*by_label["D(S1)"]));
    CHECK_FALSE(is_ray(*by_label["D(S2)"]));
    CHECK(is_ray(*by_label["D(I1)"]));
    CHECK(is_ray(*by_label["D(P2)"]));

    // D(M_{alpha+beta}) and D(M_{2alpha+beta}) lie on the negative side of
    // D(M_alpha): their facet samples pair negatively with dim S1
    Fan f = build_fan(m, full_wide(m));
    DimVec alpha{1, 0};
    int hits = 0;
    for (const Facet& ft : f.facets) {
        if (ft.brick == m.root_id({1, 1}) || ft.brick == m.root_id({2, 1})) {
            CHECK(stability_pairing(m, ft.sample, alpha) < 0);
            ++hits;
        }
    }
    CHECK(hits == 2);
}

TEST_CASE("render: rank-3 drawing structure for A3") {
    Model m = build_model("A3: 1<2<3");
    RenderSpec spec;
    spec.samples_per_arc = 24;
    Drawing d = make_drawing(m, spec);
    REQUIRE(d.rank == 3);
    REQUIRE(d.walls.size() == 6);
    int closed = 0;
    for (const WallPath& w : d.walls) {
        REQUIRE(w.points.size() == 24);
        for (const auto& pt : w.points) {
            REQUIRE(std::isfinite(pt[0]));
            REQUIRE(std::isfinite(pt[1]));
        }
        if (w.closed) {
            ++closed;
        } else {  // open arcs keep both endpoints, and they differ
            double dx = w.points.front()[0] - w.points.back()[0];
            double dy = w.points.front()[1] - w.points.back()[1];
            CHECK(std::hypot(dx, dy) > 1e-6);
        }
    }
    CHECK(closed == 3);  // exactly the simples

    RenderSpec labeled;
    labeled.chamber_labels = true;
    Drawing d2 = make_drawing(build_model("A2: 1>2"), labeled);
    std::set<std::string> names;
    for (const ChamberLabel& c : d2.chambers) names.insert(c.text);
    CHECK(names ==
          std::set<std::string>{"0", "{S2}", "{S1}", "{S1,P1}", "mod"});
}

TEST_CASE("render: documents are deterministic and well-formed") {
    Model m = build_model("A3: 1<2<3");
    RenderSpec spec;
    std::string svg1 = render_svg(m, spec), svg2 = render_svg(m, spec);
    CHECK(svg1 == svg2);
    CHECK(svg1.rfind("<svg ", 0) == 0);
    CHECK(svg1.find("</svg>\n") == svg1.size() - 7);
    CHECK(svg1.find("<polygon") != std::string::npos);   // closed simple walls
    CHECK(svg1.find("<polyline") != std::string::npos);  // open arcs
    CHECK(svg1.find("D(P3)") != std::string::npos);
    CHECK(svg1.find("-0.0000") == std::string::npos);

    std::string tikz = render_tikz(m, spec);
    CHECK(tikz == render_tikz(m, spec));
    CHECK(tikz.find("\\end{tikzpicture}\n") == tikz.size() - 18);
    CHECK(tikz.find("-- cycle") != std::string::npos);
    CHECK(tikz.find("-0.0000") == std::string::npos);

    std::string b2 = render_svg(build_model("B2: 1<(1,2)2"), spec);
    CHECK(b2.find("D(P2)") != std::string::npos);
    CHECK(b2.find("-0.0000") == std::string::npos);

    // rank 1: a dot on an axis plus two chamber labels
    RenderSpec r1;
    r1.chamber_labels = true;
    std::string a1 = render_svg(build_model("A1:"), r1);
    CHECK(a1.find("<circle") != std::string::npos);
    CHECK(a1.find(">mod<") != std::string::npos);
}

TEST_CASE("cli: draw writes identical bytes to stdout and --out") {
    CliResult direct = cli({"draw", "--quiver", "A2: 1>2"}, false);
    REQUIRE(direct.status == 0);
    CHECK(direct.out.rfind("<svg ", 0) == 0);

    std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "clusterpic_cli_draw_test.svg";
    CliResult filed =
        cli({"draw", "--quiver", "A2: 1>2", "--out", tmp.string()});
    REQUIRE(filed.status == 0);
    CHECK(filed.json["written"] == tmp.string());
    std::ifstream in(tmp, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    CHECK(filed.json["bytes"] == direct.out.size());
    std::filesystem::remove(tmp);

    CliResult tikz = cli({"draw", "--quiver", "A1:", "--format", "tikz"}, false);
    REQUIRE(tikz.status == 0);
    CHECK(tikz.out.find("\\begin{tikzpicture}") != std::string::npos);
}

TEST_CASE("cli: draw rejects rank > 3 and poles on walls") {
    CliResult r4 = cli({"draw", "--quiver", "D4:", "--arrows", "1>2,3>2,4>2"});
    CHECK(r4.status == 1);
    CHECK(r4.json["error"]["kind"] == "unsupported_operation");

    CliResult pole = cli({"draw", "--quiver", "A3: 1<2<3", "--pole", "0,0,1"});
    CHECK(pole.status == 1);
    CHECK(pole.json["error"]["kind"] == "invalid_argument");

    CliResult fmt = cli({"draw", "--quiver", "A2: 1>2", "--format", "png"});
    CHECK(fmt.status == 2);
    CHECK(fmt.json["error"]["kind"] == "usage");
}
