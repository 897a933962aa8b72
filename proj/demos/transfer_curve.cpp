// Finds the first connection set with PST for a given n and prints |H(tau)_uv| near the transfer time.
// usage: transfer_curve [n]

#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "vpst/vpst.hpp"

int main(int argc, char** argv) {
    const vpst::GroupParams g(argc > 1 ? std::atoi(argv[1]) : 3);
    for (const auto& set : vpst::enumerate_connection_sets(g, 4)) {
        const auto table = vpst::eigenvalues(set);
        const auto pairs = vpst::all_pst_pairs(table);
        if (pairs.empty()) continue;

        const auto& p = pairs.front();
        const auto classes = vpst::conjugacy_classes(g);
        std::printf("n = %d, S =", g.n());
        for (int c : set.class_ids()) std::printf(" %s", classes[static_cast<std::size_t>(c)].tag.c_str());
        std::printf("\n%zu PST pairs; first %d <-> %d via %s, M = %lld\n", pairs.size(), p.u.idx, p.v.idx,
                    std::string(vpst::to_string(p.clause)).c_str(), static_cast<long long>(p.M));

        const vpst::SpectralTransition h(table);
        for (int k = 0; k <= 20; ++k) {
            const double tau = p.min_time * k / 10.0;
            const double mag = std::abs(h.entry(p.u.idx, p.v.idx, tau));
            std::printf("  tau = %6.4f pi  |H_uv| = %.9f  %s\n", tau / std::numbers::pi, mag,
                        std::string(static_cast<std::size_t>(mag * 40), '#').c_str());
        }
        return 0;
    }
    std::printf("no connection set with at most 4 classes has PST for n = %d\n", g.n());
    return 1;
}
