// Three 14-dimensional sphere bundles over CP^3 with the same cohomology ring:
// two are diffeomorphic, the third is told apart by its first Pontrjagin class.

#include <iostream>

#include "torusclass/classify.hpp"

using namespace torusclass;

int main()
{
    const ManifoldDescriptor corpus[] = {
        {Family::B, 3, 2, 1, 3},
        {Family::B, 3, 1, 4, 0},
        {Family::B, 3, 2, 4, 0},
    };
    for (const auto& d : corpus) {
        auto rep = report(d);
        std::cout << render(d) << "  dim " << rep.dimension << "  " << to_string(rep.cohomology) << "  p = "
                  << rep.pontrjagin.poly << "  " << to_string(rigidity_class(d).tag) << "\n";
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto cmp = compare_report(corpus[i], corpus[j]);
            std::cout << render(corpus[i]) << " vs " << render(corpus[j]) << ": ring "
                      << (cmp.ring_isomorphic ? "isomorphic" : "different") << ", p preserved by some iso: "
                      << (cmp.p_preservable.value_or(false) ? "yes" : "no") << ", "
                      << to_string(cmp.verdict.outcome) << " (" << cmp.verdict.reason << ")\n";
        }
}
