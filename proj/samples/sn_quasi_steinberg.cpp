// Lists the quasi p-Steinberg characters of S_n for each prime p <= n and
// prints one character value with a vanishing witness.
#include <cstdlib>
#include <iostream>

#include <qsteinberg/qsteinberg.hpp>

int main(int argc, char** argv)
{
    using namespace qsteinberg;
    const unsigned n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 8;

    for (unsigned p : primes_up_to(n)) {
        const auto report = classify(Group::sn, n, p);
        std::cout << "S_" << n << ", p = " << p << ":";
        for (const auto& h : report.hits)
            std::cout << "  (" << h.label << ")" << (h.weak ? "*" : "");
        std::cout << '\n';
        if (!report.witnesses.empty()) {
            const auto& w = report.witnesses.front();
            std::cout << "  e.g. chi_(" << w.label << ") vanishes on the " << p << "-regular class (" << w.cls
                      << ")\n";
        }
    }
    std::cout << "(* marks weak p-Steinberg characters)\n";
}
