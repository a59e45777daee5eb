// Generalized eigenspaces of X on V (x) V^(x)d against the Weyl-filtration count.
#include <slpcat/hecke.hpp>

#include <iostream>

int main()
{
    using namespace slpcat;
    const int p = 3;
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d) {
            const auto got = generalized_eigenspaces(tensor_casimir_on_tensor_power(n, d, p));
            const auto want = predicted_F_alpha_dims(n, d, p);
            std::cout << "n=" << n << " d=" << d << ":";
            for (int a = 0; a < p; ++a)
                std::cout << " " << a << ":" << got.dims[static_cast<std::size_t>(a)] << "/"
                          << want[static_cast<std::size_t>(a)];
            std::cout << "\n";
        }
}
