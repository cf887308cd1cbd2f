#include "glrack/functors.hpp"

namespace glrack {

GLRack functor_f(const Rack& R) {
  const Permutation th = theta(R);
  const Permutation th_inv = inverse(th);
  std::vector<Permutation> s;
  s.reserve(R.order());
  for (const Permutation& sx : R.structure()) s.push_back(compose(th_inv, sx));
  return GLRack(Rack(std::move(s)), th);
}

Rack functor_g(const GLRack& G) {
  std::vector<Permutation> s;
  s.reserve(G.order());
  for (const Permutation& sx : G.rack().structure()) s.push_back(compose(G.u(), sx));
  return Rack(std::move(s));
}

namespace {

std::string show(const Rack& R) {
  std::string out = "[";
  for (std::size_t x = 0; x < R.order(); ++x) {
    if (x) out += ", ";
    out += print_cycles(R.s(x));
  }
  return out + "]";
}

}  // namespace

RoundtripReport roundtrip_check(const std::vector<Rack>& racks,
                                const std::vector<GLRack>& glquandles) {
  RoundtripReport report;
  for (const Rack& R : racks) {
    ++report.racks_checked;
    const GLRack FR = functor_f(R);
    if (!is_quandle(FR.rack())) report.failures.push_back("F(R) is not a quandle for R = " + show(R));
    if (functor_g(FR) != R) report.failures.push_back("GF(R) != R for R = " + show(R));
    if (is_medial(R) != is_medial(FR.rack()))
      report.failures.push_back("mediality not preserved by F for R = " + show(R));
  }
  for (const GLRack& Q : glquandles) {
    ++report.glquandles_checked;
    if (!is_quandle(Q.rack())) {
      report.failures.push_back("not a GL-quandle: " + show(Q.rack()) + " u=" + print_cycles(Q.u()));
      continue;
    }
    if (functor_f(functor_g(Q)) != Q)
      report.failures.push_back("FG(Q) != Q for Q = " + show(Q.rack()) + " u=" + print_cycles(Q.u()));
  }
  return report;
}

bool hom_transport_check(const Rack& R, const Rack& S, std::span<const Point> phi) {
  const bool rack_hom = is_rack_hom(R, S, phi);
  const GLRack FR = functor_f(R), FS = functor_f(S);
  if (rack_hom != is_gl_hom(FR, FS, phi)) return false;
  // And back through G, which recovers R and S exactly.
  return rack_hom == is_rack_hom(functor_g(FR), functor_g(FS), phi);
}

}  // namespace glrack
