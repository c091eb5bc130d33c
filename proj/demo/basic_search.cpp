// Minimal use of the library: encode, search with two mismatches, print.
#include <iostream>

#include "iupacscan/iupacscan.hpp"

int main() {
  const auto text = iupacscan::encode_text("ATGACCGGCAT");
  const auto pattern = iupacscan::encode_pattern("C[CGT]GG[CG]");
  for (const auto& hit : iupacscan::search(text, pattern, 2))
    std::cout << "position " << hit.position << ", " << hit.mismatches << " mismatches\n";
}
