// Counts Type 1/2/3 graphs and PST-admitting graphs among class-union connection sets for even n.
// usage: type_census [max_n]

#include <cstdio>
#include <cstdlib>

#include "vpst/vpst.hpp"

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
    std::printf("%4s %8s %9s %7s %7s %7s %9s\n", "n", "sets", "integral", "type1", "type2", "type3", "with PST");
    for (int n = 2; n <= max_n; n += 2) {
        const vpst::GroupParams g(n);
        int sets = 0, integral = 0, t1 = 0, t2 = 0, t3 = 0, pst = 0;
        for (const auto& set : vpst::enumerate_connection_sets(g, static_cast<int>(vpst::conjugacy_classes(g).size()))) {
            ++sets;
            const auto table = vpst::eigenvalues(set);
            if (!table.all_integral()) continue;
            ++integral;
            const auto types = vpst::classify_graph_type(table);
            t1 += types.type1;
            t2 += types.type2;
            t3 += types.type3;
            pst += vpst::all_pst_pairs(table).empty() ? 0 : 1;
        }
        std::printf("%4d %8d %9d %7d %7d %7d %9d\n", n, sets, integral, t1, t2, t3, pst);
    }
}
