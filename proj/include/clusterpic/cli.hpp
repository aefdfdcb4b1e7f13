#pragma once
// The command-line surface.  run_cli parses argv (without the program
// name), executes one subcommand, writes the result to `out`, and returns
// the process exit status.  Every library failure surfaces as machine-
// readable error JSON and a nonzero status.

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "clusterpic/json_io.hpp"
#include "clusterpic/render.hpp"

namespace clusterpic {

namespace detail {

inline std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "S2[1],I2,S3" (or "-P2" for a shift) -> Sequence, in display order.
inline Sequence parse_sequence(const Model& m, const std::string& text) {
    Sequence s;
    if (text.empty()) return s;
    for (std::string tok : split_list(text, ',')) {
        if (tok.empty()) throw invalid_argument_error("empty term in sequence '" + text + "'");
        bool shifted = false;
        if (tok.front() == '-') {
            shifted = true;
            tok.erase(tok.begin());
        }
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "[1]") {
            shifted = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        int id = -1;
        for (size_t i = 0; i < m.names.size(); ++i)
            if (m.names[i] == tok) id = (int)i;
        if (id < 0) throw invalid_argument_error("unknown module name '" + tok + "'");
        s.push_back({shifted, id});
    }
    return s;
}

inline DimVec parse_point(const std::string& text) {
    DimVec g;
    for (const std::string& tok : split_list(text, ',')) {
        try {
            size_t used = 0;
            g.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw invalid_argument_error("bad integer '" + tok + "' in point '" + text + "'");
        }
    }
    return g;
}

inline std::vector<double> parse_pole(const std::string& text) {
    std::vector<double> v;
    for (const std::string& tok : split_list(text, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw invalid_argument_error("bad number '" + tok + "' in pole '" + text + "'");
        }
    }
    if (v.size() != 3) throw invalid_argument_error("pole needs 3 coordinates");
    return v;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"clusterpic: an exact workbench for semi-invariant pictures, signed "
                 "exceptional sequences, picture groups, and torsion lattices",
                 "clusterpic"};
    app.require_subcommand(1);

    struct Common {
        std::string quiver, arrows;
        int field_order = 0;
    };
    Common c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", c.quiver, "quiver spec, e.g. \"A3: 1>2>3\"")->required();
        sub->add_option("--arrows", c.arrows, "explicit arrow list, e.g. \"2>1,3>2\"");
        sub->add_option("--field-order", c.field_order,
                        "oracle field order (default: CLUSTERPIC_FIELD_ORDER or 2)");
        return sub;
    };

    CLI::App* roots = add_common(app.add_subcommand("roots", "positive roots"));
    CLI::App* indec =
        add_common(app.add_subcommand("indecomposables", "indecomposable modules"));
    CLI::App* clusters = add_common(app.add_subcommand("clusters", "cluster-tilting objects"));
    CLI::App* fan = add_common(app.add_subcommand("fan", "the g-vector fan with wall labels"));

    std::string point_text;
    CLI::App* wide = add_common(
        app.add_subcommand("wide", "wide subcategories (all, or the one at --point)"));
    wide->add_option("--point", point_text, "integer point g, e.g. \"1,-1,0\"");

    std::string seq_text, complete_text;
    bool do_list = false;
    CLI::App* exc = add_common(app.add_subcommand("exc-seq", "exceptional sequences"));
    exc->add_option("--validate", seq_text, "sequence to check, e.g. \"S3,P1,S1\"");
    exc->add_option("--complete", complete_text, "partial sequence to complete on the left");
    exc->add_flag("--list", do_list, "list all complete sequences (default action)");
    CLI::App* sexc =
        add_common(app.add_subcommand("signed-exc-seq", "signed exceptional sequences"));
    sexc->add_option("--validate", seq_text, "sequence to check, e.g. \"S2[1],I2,S3\"");
    sexc->add_option("--complete", complete_text, "partial sequence to complete on the left");
    sexc->add_flag("--list", do_list, "list all complete sequences (default action)");

    std::string first_text, then_text;
    CLI::App* compose_cmd =
        add_common(app.add_subcommand("compose", "compose two cluster morphisms"));
    compose_cmd->add_option("--first", first_text, "factorization of the morphism applied first")
        ->required();
    compose_cmd
        ->add_option("--then", then_text,
                     "factorization of the second morphism, over the codomain of the first")
        ->required();

    int braid_pos = 0, braid_dir = 1;
    CLI::App* braid = add_common(app.add_subcommand("braid", "apply one braid move"));
    braid->add_option("--seq", seq_text, "complete signed exceptional sequence")->required();
    braid->add_option("--pos", braid_pos, "1-based position i acting on terms (i, i+1)")
        ->required();
    braid->add_option("--dir", braid_dir, "+1 or -1")->required();

    CLI::App* group =
        add_common(app.add_subcommand("picture-group", "picture group presentation"));
    CLI::App* homology_cmd =
        add_common(app.add_subcommand("homology", "integral homology of the picture space"));
    CLI::App* torsion_cmd = add_common(
        app.add_subcommand("torsion", "torsion lattice (all classes, or the one at --point)"));
    torsion_cmd->add_option("--point", point_text, "integer point g, e.g. \"2,-1\"");

    std::string format = "svg", pole_text, out_path;
    int samples = 48;
    bool chamber_labels = false;
    CLI::App* draw = add_common(app.add_subcommand("draw", "render the picture (rank <= 3)"));
    draw->add_option("--format", format, "svg or tikz")
        ->check(CLI::IsMember({"svg", "tikz"}));
    draw->add_option("--samples", samples, "samples per wall arc (min 16)");
    draw->add_option("--pole", pole_text, "stereographic pole, e.g. \"-1,-1,-1\"");
    draw->add_flag("--chamber-labels", chamber_labels, "label chambers with torsion classes");
    draw->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << json_error("usage", e.what()).dump(2) << "\n";
        return 2;
    }

    try {
        Model m = build_model(c.quiver, c.arrows);
        if (c.field_order) {
            if (!is_prime(c.field_order))
                throw invalid_argument_error("--field-order must be prime");
        }
        int p = c.field_order ? c.field_order : default_field_order();
        Wide full = full_wide(m);

        if (roots->parsed()) {
            Json j = json_envelope("roots");
            j["roots"] = m.roots;
            j["names"] = m.names;
            out << j.dump(2) << "\n";
        } else if (indec->parsed()) {
            Json j = json_envelope("indecomposables");
            Json a = Json::array();
            for (size_t i = 0; i < m.roots.size(); ++i)
                a.push_back(Json{{"name", m.names[i]},
                                 {"dim", m.roots[i]},
                                 {"g_vector", g_vector(m, m.roots[i])}});
            j["modules"] = a;
            out << j.dump(2) << "\n";
        } else if (clusters->parsed()) {
            Json j = json_envelope("clusters");
            Json a = Json::array();
            for (const Cluster& cl : all_clusters(m, full)) a.push_back(json_objects(m, cl));
            j["clusters"] = a;
            j["count"] = a.size();
            out << j.dump(2) << "\n";
        } else if (fan->parsed()) {
            Json j = json_envelope("fan");
            j["fan"] = json_fan(m, build_fan(m, full));
            out << j.dump(2) << "\n";
        } else if (wide->parsed()) {
            Json j = json_envelope("wide");
            if (!point_text.empty()) {
                j["point"] = detail::parse_point(point_text);
                j["wide"] = json_wide(m, wide_at_point(m, detail::parse_point(point_text), p));
            } else {
                Json a = Json::array();
                for (const Wide& w : all_wide_subcategories(m)) a.push_back(json_wide(m, w));
                j["wides"] = a;
                j["count"] = a.size();
            }
            out << j.dump(2) << "\n";
        } else if (exc->parsed() || sexc->parsed()) {
            bool signed_mode = sexc->parsed();
            Json j = json_envelope(signed_mode ? "signed-exc-seq" : "exc-seq");
            if (!seq_text.empty()) {
                Sequence s = detail::parse_sequence(m, seq_text);
                if (!signed_mode)
                    for (const ClusterObject& x : s)
                        if (x.shifted)
                            throw invalid_argument_error(
                                "shifted term in an unsigned sequence; use signed-exc-seq");
                SequenceCheck chk = check_signed_sequence(m, full, s);
                j["sequence"] = json_sequence(m, s);
                j["valid"] = chk.ok;
                if (!chk.ok) j["reason"] = chk.reason;
            } else if (!complete_text.empty()) {
                Sequence s = detail::parse_sequence(m, complete_text);
                j["sequence"] = json_sequence(m, s);
                j["completions"] =
                    json_sequences(m, complete_on_left(m, full, s, signed_mode));
            } else {
                std::vector<Sequence> all = signed_mode
                                                ? all_signed_exceptional_sequences(m, full)
                                                : all_exceptional_sequences(m, full);
                j["sequences"] = json_sequences(m, all);
                j["count"] = all.size();
            }
            out << j.dump(2) << "\n";
        } else if (compose_cmd->parsed()) {
            ClusterMorphism f = composite_morphism(m, full, detail::parse_sequence(m, first_text));
            ClusterMorphism g =
                composite_morphism(m, f.cod, detail::parse_sequence(m, then_text));
            ClusterMorphism gf = compose(m, g, f);
            Json j = json_envelope("compose");
            j["first"] = json_morphism(m, f);
            j["then"] = json_morphism(m, g);
            j["composite"] = json_morphism(m, gf);
            out << j.dump(2) << "\n";
        } else if (braid->parsed()) {
            Sequence s = detail::parse_sequence(m, seq_text);
            if (braid_dir != 1 && braid_dir != -1)
                throw invalid_argument_error("--dir must be +1 or -1");
            Sequence t = braid_move(m, full, s, braid_pos, braid_dir);
            Json j = json_envelope("braid");
            j["sequence"] = json_sequence(m, s);
            j["position"] = braid_pos;
            j["direction"] = braid_dir;
            j["result"] = json_sequence(m, t);
            out << j.dump(2) << "\n";
        } else if (group->parsed()) {
            Json j = json_envelope("picture-group");
            j["presentation"] = json_presentation(m, presentation(m));
            out << j.dump(2) << "\n";
        } else if (homology_cmd->parsed()) {
            ChainComplex cc = cubical_complex(m);
            HomologyResult h = homology(cc);
            Json j = json_envelope("homology");
            j["betti"] = h.betti;
            j["torsion"] = json_homology(h)["torsion"];
            Json sizes = Json::array();
            for (const auto& b : cc.basis) sizes.push_back(b.size());
            j["basis_sizes"] = sizes;
            j["euler_characteristic"] = cc.euler_characteristic();
            out << j.dump(2) << "\n";
        } else if (torsion_cmd->parsed()) {
            Json j = json_envelope("torsion");
            if (!point_text.empty()) {
                DimVec g = detail::parse_point(point_text);
                j["point"] = g;
                j["class"] = json_torsion_class(m, torsion_class_of_point(m, g, p));
            } else {
                j["hasse"] = json_torsion_hasse(m, torsion_hasse(m, p));
            }
            out << j.dump(2) << "\n";
        } else if (draw->parsed()) {
            RenderSpec spec;
            spec.samples_per_arc = samples;
            spec.chamber_labels = chamber_labels;
            spec.field_order = c.field_order;
            if (!pole_text.empty()) spec.pole = detail::parse_pole(pole_text);
            std::string doc = format == "svg" ? render_svg(m, spec) : render_tikz(m, spec);
            if (out_path.empty()) {
                out << doc;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw invalid_argument_error("cannot open " + out_path);
                file << doc;
                Json j = json_envelope("draw");
                j["written"] = out_path;
                j["bytes"] = doc.size();
                out << j.dump(2) << "\n";
            }
        }
        return 0;
    } catch (const error& e) {
        out << json_error(e.kind(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace clusterpic
