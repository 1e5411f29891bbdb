#include <mutex>

#include "polyforge/expr/infix.hpp"
#include "polyforge/universal/universal.hpp"

namespace polyforge::universal {

const std::string& jones_figure1_text() {
  static const std::string text =
      "(x1*x2*x3^2 + x4 - (x5 - n*m3)*x6^2)^2\n"
      "+ (x6 - x5^(5^60))^2\n"
      "+ (x7 + x6^4 - 1 - x7*x5^5)^2\n"
      "+ (x8 + 2*m1 - x5^5)^2\n"
      "+ (x2 - m2 - x9*x8)^2\n"
      "+ (x1 - m3 - x10*x8)^2\n"
      "+ (x11 - x6^16)^2\n"
      "+ ([x3 + x1*x6^3 + x2*x6^5 + (2*(x1 - m1*x7)*(1 + n*x5^5 + x3)^4 + x7*x5^5"
      " + x7*x5^5*x6^4)*x6^4]*[x11^2 - x11]\n"
      "   + [x6^3 - x5*x2 + x2 + x8*x7*x6^3 + (x5^5 - 2)*x6^5]*[x11^2 - 1] - x12)^2\n"
      "+ (x13 - 2*x14*x15^2*x12^2*x11^2)^2\n"
      "+ (x13^2*x16^2 - x16^2 + 1 - x17^2)^2\n"
      "+ (4*(x18 - x16*x15*x11^2)^2 + x19 - x16^2)^2\n"
      "+ (x16 - x12 - 1 - x20*x13 + x20)^2\n"
      "+ (x21 - (x14*x11^2 + 1)*x12*x15*x11^2)^2\n"
      "+ (x18 - 2*x12 - 1 - x22)^2\n"
      "+ (x23 - x5*x14 - x18*x21 + 2*x18 - 4*x21*x24 + 5*x24)^2\n"
      "+ (x23^2 - (x21^2 - 1)*x18^2 - 1)^2\n"
      "+ (x25^2 - (x21^2 - 1)*x26^2*x18^4 - 1)^2\n"
      "+ ((x23 + x27*x25)^2 - ((x21 + x25^2*(x23^2 - x21))^2 - 1)*(2*x12 + 1 + x28*x18)^2 - 1)^2\n";
  return text;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::uint64_t kJonesFigure1Checksum = 0xfcdaf5a26ec60377ULL;

expr::NodeRef jones_figure1(expr::DagBuilder& b) {
  if (fnv1a64(jones_figure1_text()) != kJonesFigure1Checksum)
    throw std::logic_error("Figure 1 transcription checksum mismatch");
  return expr::parse_infix(jones_figure1_text(), b);
}

expr::NodeRef jones_figure1() {
  static std::mutex mu;
  static expr::NodeRef cached;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached) {
    expr::DagBuilder b;
    cached = jones_figure1(b);
  }
  return cached;
}

}  // namespace polyforge::universal
