// Evaluates the Q~ Pfaffian at c(W^v) for a few vanishing sequences and
// compares it with the closed-form pointed class.

#include <iostream>

#include <pbn/pbn.hpp>

int main()
{
    for (const auto& a : {pbn::VanishingSequence{0, 1}, pbn::VanishingSequence{0, 2},
                          pbn::VanishingSequence{1, 3, 4}, pbn::VanishingSequence{0, 2, 5, 7}}) {
        auto engine = pbn::lagrangian_class_pointed(a);
        auto formula = pbn::twisted_pointed_class(a);
        std::cout << pbn::to_string(a) << ": engine " << pbn::to_string(engine) << ", formula "
                  << pbn::to_string(formula) << (engine == formula ? "  ok" : "  MISMATCH") << "\n";
    }

    // the unpointed twisted class sits a factor 2^{r+1} below the staircase Q~
    for (int r = 0; r <= 3; ++r) {
        auto lambda = pbn::StrictPartition::staircase(r + 1);
        auto q = pbn::q_tilde(lambda, pbn::chern_series_W(lambda.weight()));
        std::cout << "r=" << r << ": Q~" << pbn::to_string(lambda) << " = " << pbn::to_string(q.coeff())
                  << ", twisted class coeff " << pbn::to_string(pbn::twisted_class(r).coeff()) << "\n";
    }
}
