// Crystal operators on a GL_14 weight in characteristic 5.
#include <slpcat/crystal.hpp>

#include <iostream>

int main()
{
    using namespace slpcat;
    const Weight lambda = parse_weight("18,16,15,15,12,7,7,5,0,-4,-8,-12,-15,-19");
    const Residue alpha(5, 2);

    const Signature raw = alpha_signature(lambda, alpha);
    const Signature reduced = reduce_signature(raw);
    std::cout << "signature " << raw.symbols() << " on rows " << format_int_list(raw.rows()) << "\n"
              << "reduced   " << reduced.symbols() << " on rows " << format_int_list(reduced.rows()) << "\n";

    if (auto up = crystal_f(lambda, alpha))
        std::cout << "f~ lambda = " << to_string(*up) << "\n";
    if (auto down = crystal_e(lambda, alpha))
        std::cout << "e~ lambda = " << to_string(*down) << "\n";
}
