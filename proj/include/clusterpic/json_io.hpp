#pragma once
// JSON serialization of every workbench value the CLI exposes.  All
// documents carry a top-level "schema" field; keys are emitted in sorted
// order (nlohmann::json's object storage), so output is deterministic.

#include <json.hpp>

#include <string>
#include <vector>

#include "clusterpic/morphism.hpp"
#include "clusterpic/picture.hpp"
#include "clusterpic/torsion.hpp"

namespace clusterpic {

using Json = nlohmann::json;

inline const char* kSchema = "clusterpic/1";

inline Json json_envelope(const std::string& command) {
    return Json{{"schema", kSchema}, {"command", command}};
}

inline Json json_error(const std::string& kind, const std::string& message) {
    return Json{{"schema", kSchema}, {"error", Json{{"kind", kind}, {"message", message}}}};
}

inline Json json_object(const Model& m, const ClusterObject& x) {
    return Json{{"name", object_name(m, x)},
                {"root", m.roots.at(x.root)},
                {"shifted", x.shifted}};
}

inline Json json_objects(const Model& m, const std::vector<ClusterObject>& xs) {
    Json a = Json::array();
    for (const ClusterObject& x : xs) a.push_back(json_object(m, x));
    return a;
}

inline Json json_wide(const Model& m, const Wide& w) {
    Json names = Json::array(), roots = Json::array();
    for (int id : w) {
        names.push_back(m.names.at(id));
        roots.push_back(m.roots.at(id));
    }
    return Json{{"names", names}, {"roots", roots}, {"rank", wide_rank(m, w)}};
}

inline Json json_sequence(const Model& m, const Sequence& s) {
    Json a = Json::array();
    for (const ClusterObject& x : s) a.push_back(object_name(m, x));
    return a;
}

inline Json json_sequences(const Model& m, const std::vector<Sequence>& ss) {
    Json a = Json::array();
    for (const Sequence& s : ss) a.push_back(json_sequence(m, s));
    return a;
}

inline Json json_morphism(const Model& m, const ClusterMorphism& f) {
    return Json{{"name", morphism_name(m, f)},
                {"domain", json_wide(m, f.dom)},
                {"codomain", json_wide(m, f.cod)},
                {"components", json_objects(m, f.T)},
                {"rank", f.rank()}};
}

inline Json json_word(const Model& m, const Word& w) {
    Json a = Json::array();
    for (const Letter& l : w)
        a.push_back(Json{{"generator", m.names.at(l.root)}, {"exponent", l.exp}});
    return a;
}

inline Json json_presentation(const Model& m, const Presentation& p) {
    Json gens = Json::array();
    for (size_t i = 0; i < m.roots.size(); ++i)
        gens.push_back(Json{{"name", m.names.at(i)}, {"root", m.roots[i]}});
    Json rels = Json::array();
    for (const Word& w : p.relations)
        rels.push_back(Json{{"word", json_word(m, w)}, {"display", word_name(m, w)}});
    return Json{{"generators", gens}, {"relations", rels},
                {"abelianization_rank", abelianization_rank(p)}};
}

inline Json json_homology(const HomologyResult& h) {
    // Torsion is listed only for degrees that have any, so torsion-free
    // homology serializes as the flat empty array.
    Json torsion = Json::array();
    for (size_t deg = 0; deg < h.torsion.size(); ++deg) {
        if (h.torsion[deg].empty()) continue;
        Json t = Json::array();
        for (const auto& d : h.torsion[deg]) t.push_back(d.get_str());
        torsion.push_back(Json{{"degree", deg}, {"divisors", t}});
    }
    return Json{{"betti", h.betti}, {"torsion", torsion}};
}

inline Json json_fan(const Model& m, const Fan& f) {
    Json chambers = Json::array();
    for (size_t ci = 0; ci < f.clusters.size(); ++ci)
        chambers.push_back(Json{{"id", (int)ci},
                                {"cluster", json_objects(m, f.clusters[ci])},
                                {"g_vectors", f.gvecs[ci]}});
    Json facets = Json::array();
    for (const Facet& ft : f.facets)
        facets.push_back(Json{{"face", json_objects(m, ft.face)},
                              {"chambers", Json::array({ft.chamber_a, ft.chamber_b})},
                              {"brick", m.names.at(ft.brick)},
                              {"sample", ft.sample},
                              {"positive_side", ft.positive_side}});
    return Json{{"rank", f.rank}, {"chambers", chambers}, {"facets", facets}};
}

inline Json json_torsion_class(const Model& m, const TorsionClass& t) {
    Json members = Json::array();
    for (int r : t.roots) members.push_back(m.names.at(r));
    return Json{{"members", members}, {"chamber", t.chamber},
                {"display", torsion_class_name(m, t)}};
}

inline Json json_torsion_hasse(const Model& m, const TorsionHasse& h) {
    Json classes = Json::array();
    for (const TorsionClass& t : h.classes) classes.push_back(json_torsion_class(m, t));
    Json edges = Json::array();
    for (const HasseEdge& e : h.edges)
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"brick", m.names.at(e.brick)}});
    return Json{{"classes", classes}, {"edges", edges}};
}

}  // namespace clusterpic
