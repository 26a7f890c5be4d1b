// Spectrum and chi_q of H(3,2) x H(8,4).

#include "hamq/products.hpp"

#include <iostream>

int main() {
    const hamq::HammingGraphSpec a{3, 2};
    const hamq::HammingGraphSpec b{8, 4};
    const auto pg = hamq::product_spectrum(hamq::spectrum_closed_form(a), hamq::spectrum_closed_form(b));
    for (const auto& e : pg.spectrum) std::cout << e.eigenvalue << " x" << e.multiplicity << '\n';
    const auto v = hamq::product_chi_q(a, b);
    std::cout << "chi_q = " << *v.exact() << " [";
    for (const auto& tag : v.tags) std::cout << ' ' << tag;
    std::cout << " ]\n";
    return 0;
}
