// Prints the prime class tables up to a length, the representative pairs built
// from them, and whether each commutator U D - D U is reachable using only
// those pairs.
//
//   minimal_generators [max_len]   (default 6)

#include <cstdlib>
#include <iostream>

#include "balanced/balanced.hpp"

using namespace balanced;

int main(int argc, char** argv) {
  const std::size_t max_len = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  if (max_len < 2 || max_len > 10) {
    std::cerr << "max_len must be between 2 and 10\n";
    return 2;
  }

  for (auto kind : {PrimeKind::Upper, PrimeKind::Lower}) {
    const auto table = prime_classes(kind, max_len);
    std::cout << to_string(kind) << " prime classes (" << table.classes.size() << "):\n";
    for (const auto& c : table.classes) {
      std::cout << "  " << c.representative;
      if (c.members.size() > 1) {
        std::cout << "  ~";
        for (std::size_t i = 1; i < c.members.size(); ++i) std::cout << ' ' << c.members[i];
      }
      std::cout << '\n';
    }
  }

  const auto pairs = minimal_generating_pairs(max_len);
  std::cout << "\n" << pairs.size() << " generating pairs\n";

  std::size_t generated = 0, total = 0;
  for (const auto& u : enumerate_primes(PrimeKind::Upper, max_len)) {
    for (const auto& d : enumerate_primes(PrimeKind::Lower, max_len)) {
      ++total;
      if (verify_generation(u, d, pairs)) ++generated;
    }
  }
  std::cout << generated << '/' << total << " commutators reachable\n";

  std::size_t essential = 0;
  for (const auto& [p, still] : verify_minimality(pairs))
    if (!still) ++essential;
  std::cout << essential << '/' << pairs.size() << " pairs cannot be dropped\n";
  return generated == total && essential == pairs.size() ? 0 : 1;
}
