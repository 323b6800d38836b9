// Prints the number of points of V^r_eta(f) at the genus where it is
// zero-dimensional, for double covers with 2 and 4 branch points.

#include <iostream>

#include <pbn/pbn.hpp>

int main()
{
    for (int k = 1; k <= 2; ++k) {
        std::cout << "k = " << k << "\n";
        for (int r = 1; r <= 5; ++r) {
            int g = pbn::dimension_zero_genus(k, r);
            auto space = pbn::make_space(pbn::PrymFlavor::ramified_twisted, g, k);
            auto cls = pbn::twisted_class(r);
            std::cout << "  r=" << r << " g=" << g << "  [V] = " << pbn::to_string(cls)
                      << "  #points = " << pbn::count_points(cls, space) << "\n";
        }
    }
}
