#include <mclab/mcfields.hpp>

#include <iostream>

int main() {
    auto alg = mclab::SplitLieAlgebra::build('A', 2);
    mclab::Chart ch(alg, mclab::ChartKind::matrix_inverse);
    auto sol = mclab::solve_mc(mclab::full_set(alg.root_system()), ch);
    std::cout << "dimension " << sol.dimension << "\n";
    return sol.dimension == 8 ? 0 : 1;
}
