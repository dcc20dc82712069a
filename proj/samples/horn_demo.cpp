// Decides the Horn matrix and a small non-copositive matrix, printing the
// verdicts and the witness for the negative case.
#include <copos/copos.hpp>
#include <copos/io.hpp>
#include <copos/oracle.hpp>

#include <iostream>

int main() {
  const auto horn = copos::oracle::hornMatrix();
  const auto plain = copos::checkCopositive(horn);
  const auto strict = copos::checkStrictlyCopositive(horn);
  std::cout << "horn: " << copos::to_string(plain.kind) << ", " << copos::to_string(strict.kind) << "\n";
  std::cout << "  zero of the form at " << copos::io::formatVector(*strict.witness) << "\n";
  std::cout << "  matrices processed: " << plain.stats.matricesProcessed << " (worst-case bound "
            << plain.stats.worstCaseBound.str() << ")\n";

  const auto a = copos::SymmetricMatrix::fromIntegers({{1, -2}, {-2, 1}});
  const auto v = copos::checkCopositive(a);
  std::cout << "[[1,-2],[-2,1]]: " << copos::to_string(v.kind) << ", witness "
            << copos::io::formatVector(*v.witness) << ", value "
            << copos::to_string(copos::evaluateQuadratic(a, *v.witness)) << "\n";
}
