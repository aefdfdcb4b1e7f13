// A guided tour of the library: builds the two running examples (B2 and A3),
// walks from roots to clusters, signed exceptional sequences, the picture
// group, homology, and the torsion lattice, and writes the two pictures as
// SVG files into the working directory.
//
// Build target: clusterpic-tour (see samples/CMakeLists.txt).

#include <fstream>
#include <iostream>

#include <clusterpic/cli.hpp>

using namespace clusterpic;

namespace {

void heading(const std::string& s) {
    std::cout << "\n== " << s << " ==\n";
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    std::cout << "wrote " << path << " (" << bytes.size() << " bytes)\n";
}

}  // namespace

int main() {
    // ----------------------------------------------------------------- B2
    // The valued rank-2 example: one arrow with valuation (2,1), four
    // positive roots alpha, beta, alpha+beta, 2alpha+beta.
    Model b2 = build_model("B2: 1>(2,1)2");
    heading("B2 roots and g-vectors");
    for (size_t i = 0; i < b2.roots.size(); ++i)
        std::cout << "  " << b2.names[i] << "  dim " << show(b2.roots[i]) << "  g "
                  << show(g_vector(b2, b2.roots[i])) << "\n";

    heading("B2 clusters (cluster-tilting objects)");
    for (const Cluster& c : all_clusters(b2, full_wide(b2))) {
        std::cout << " ";
        for (const ClusterObject& x : c) std::cout << " " << object_name(b2, x);
        std::cout << "\n";
    }

    heading("B2 picture group: one hexagon relation");
    Presentation pres = presentation(b2);
    for (const Word& w : pres.relations) std::cout << "  " << word_name(b2, w) << " = 1\n";
    std::cout << "  abelianization rank " << abelianization_rank(pres) << "\n";

    write_file("b2_picture.svg", render_svg(b2, RenderSpec{}));

    // ----------------------------------------------------------------- A3
    Model a3 = build_model("A3: 1>2>3");
    Wide full = full_wide(a3);

    heading("A3 signed exceptional sequences");
    std::vector<Sequence> seqs = all_signed_exceptional_sequences(a3, full);
    std::cout << "  " << seqs.size() << " complete signed sequences = "
              << all_clusters(a3, full).size() << " clusters x 3!\n";

    heading("the six factorizations of the morphism for cluster {S1,S3,P1}");
    ClusterMorphism f =
        composite_morphism(a3, full, detail::parse_sequence(a3, "S3,P1,S1"));
    for (const Sequence& s : factorizations(a3, f)) {
        std::cout << " ";
        for (const ClusterObject& x : s) std::cout << " " << object_name(a3, x);
        std::cout << "\n";
    }

    heading("one braid move and its inverse");
    Sequence s0 = detail::parse_sequence(a3, "S2[1],I2,S3");
    Sequence s1 = braid_move(a3, full, s0, 1, -1);
    Sequence s2 = braid_move(a3, full, s1, 1, +1);
    std::cout << "  start  ";
    for (const ClusterObject& x : s0) std::cout << " " << object_name(a3, x);
    std::cout << "\n  sigma-(1)";
    for (const ClusterObject& x : s1) std::cout << " " << object_name(a3, x);
    std::cout << "\n  sigma+(1)";
    for (const ClusterObject& x : s2) std::cout << " " << object_name(a3, x);
    std::cout << (s2 == s0 ? "   (restored)\n" : "   (NOT restored?)\n");

    heading("A3 homology of the picture space");
    HomologyResult h = homology(cubical_complex(a3));
    std::cout << "  Betti";
    for (long long b : h.betti) std::cout << " " << b;
    std::cout << "  (torsion-free)\n";

    heading("A3 torsion lattice");
    TorsionHasse lattice = torsion_hasse(a3);
    std::cout << "  " << lattice.classes.size() << " torsion classes, "
              << lattice.edges.size() << " Hasse edges; three of them:\n";
    for (size_t i = 0; i < lattice.edges.size() && i < 3; ++i) {
        const HasseEdge& e = lattice.edges[i];
        std::cout << "    " << torsion_class_name(a3, lattice.classes[e.from]) << "  ->  "
                  << torsion_class_name(a3, lattice.classes[e.to]) << "   brick "
                  << a3.names[e.brick] << "\n";
    }

    Model a3l = build_model("A3: 1<2<3");
    write_file("a3_picture.svg", render_svg(a3l, RenderSpec{}));

    std::cout << "\ndone.\n";
    return 0;
}
