// Runs every core model on one hypergraph and prints the survivors side by side.
//
//   compare_models data/toy.hyp 2 2
#include <fstream>
#include <iostream>
#include <string>

#include "hypercore/hypercore.hpp"

using namespace hypercore;

namespace {

void show(const std::string& name, const Hypergraph& g, const std::vector<NodeId>& members) {
    std::cout << name << " (" << members.size() << "):";
    for (NodeId v : members) std::cout << ' ' << g.label(v);
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: compare_models FILE [k] [g]\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
    }
    std::size_t k = argc > 2 ? std::stoul(argv[2]) : 2;
    std::size_t g = argc > 3 ? std::stoul(argv[3]) : 2;
    Hypergraph graph = parse_hyperedge_list(in);

    auto s = stats(graph);
    std::cout << s.num_nodes << " nodes, " << s.num_edges << " edges, avg neighbours " << s.avg_neighbour_size
              << ", avg cardinality " << s.avg_edge_cardinality << "\n\n";

    auto kg = kg_core(graph, {k, g});
    show("(k,g)      k=" + std::to_string(k) + " g=" + std::to_string(g), graph, kg.members);
    show("clique     k=" + std::to_string(k), graph, clique_core(graph, k).members);
    show("(k,q)      k=" + std::to_string(k) + " q=" + std::to_string(g), graph, kq_core(graph, k, g).members);
    show("nbr-k      k=" + std::to_string(k), graph, nbr_k_core(graph, k).members);
    show("(k,d)      k=" + std::to_string(k) + " d=" + std::to_string(g), graph, kd_core(graph, k, g).members);
    show("alpha-beta a=" + std::to_string(k) + " b=" + std::to_string(g), graph, alpha_beta_core(graph, k, g).members);

    // the (k,g)-core need not be connected
    auto cooc = build_cooc_graph(graph, g);
    auto parts = core_components(cooc, kg.members);
    std::cout << "\n(k,g)-core splits into " << parts.size() << " component(s) of the threshold graph\n";
    return 0;
}
