// Prints the minimal recurrence of S(sigma_{n,3} + sigma_{n,5}) and checks it
// against the first 40 exponential sums.
#include <iostream>

#include "boolsum/boolsum.hpp"

int main() {
    using namespace boolsum;
    const DegreeSet K{3, 5};

    const auto rec = sequence_recurrence(K);
    std::cout << "x_n =";
    for (std::size_t m = 0; m < rec.order(); ++m) {
        const mpz_class& c = rec.coeffs[m];
        if (m == 0)
            std::cout << " " << c;
        else
            std::cout << (c < 0 ? " - " : " + ") << abs(c);
        std::cout << " x_{n-" << m + 1 << "}";
    }
    std::cout << "   (n >= " << rec.valid_from << ")\n";

    const auto seq = sequence(K, 0, 40);
    const auto check = verify(seq, rec);
    std::cout << "verified on " << check.checked << " terms: " << (check.ok ? "ok" : "FAILED") << "\n";
    std::cout << "c0 = " << c0_exact(K) << "\n";
    return check.ok ? 0 : 1;
}
