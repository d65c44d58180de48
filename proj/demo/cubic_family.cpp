// Grows the Petersen graph by K3 blow-ups and prints each member's invariants.
#include <cstdio>

#include "htgraph/families.hpp"

int main() {
    for (int n = 10; n <= 20; n += 2) {
        const auto t = htg::cubic_family(n);
        std::printf("n=%2d  circumference=%2d  doubly_ht=%d  %s\n", n, t.final.circumference, t.final.doubly_ht,
                    htg::encode_graph6(t.final_graph).c_str());
    }
}
