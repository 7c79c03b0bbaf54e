// Cohomology and characteristic classes of a projective bundle computed from its
// characteristic matrix, next to the closed-form answer.

#include <iostream>

#include "torusclass/davisjan.hpp"

using namespace torusclass;

int main()
{
    const ManifoldDescriptor d{Family::A, 2, 3, 2, 1};
    CharMatrix m = char_matrix_for(d);
    std::cout << "characteristic matrix of " << render(d) << ":\n";
    for (const auto& row : m.rows) {
        for (long long v : row) std::cout << "  " << v;
        std::cout << "\n";
    }
    Elimination e = eliminate_facets(face_ring(m), linear_ideal(m));
    DjClasses classes = dj_characteristic_classes(e);
    std::cout << "from the matrix : " << to_string(e.ring) << "\n"
              << "  p = " << classes.pontrjagin.poly << "\n"
              << "  w = " << classes.stiefel_whitney.poly << "\n";
    std::cout << "closed form     : " << to_string(cohomology(d)) << "\n"
              << "  p = " << pontrjagin(d).poly << "\n"
              << "  w = " << stiefel_whitney(d).poly << "\n";
}
