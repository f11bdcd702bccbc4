#include "effects/signature.hpp"

namespace effver::effects {

using logic::Ty;

Signature sig_pure() { return Signature{"pure", {}, {}, {}, {}, {}}; }

Signature sig_st(Ty s) {
  Signature sig;
  sig.name = "st";
  sig.ops = {{"get", Ty::unit(), s}, {"put", s, Ty::unit()}};
  sig.state = s;
  return sig;
}

Signature sig_exc(Ty e) {
  Signature sig;
  sig.name = "exc";
  sig.ops = {{"throw", e, Ty::empty()}};
  sig.exception = e;
  return sig;
}

Signature sig_nd() {
  Signature sig;
  sig.name = "nd";
  sig.ops = {{"choice", Ty::unit(), Ty::boolean()}, {"fail", Ty::unit(), Ty::empty()}};
  return sig;
}

Signature sig_io(Ty i, Ty o) {
  Signature sig;
  sig.name = "io";
  sig.ops = {{"read", Ty::unit(), i}, {"write", o, Ty::unit()}};
  sig.input = i;
  sig.output = o;
  return sig;
}

Signature sig_iost(Ty s, Ty i, Ty o) {
  Signature sig;
  sig.name = "iost";
  sig.ops = {{"get", Ty::unit(), s},
             {"put", s, Ty::unit()},
             {"read", Ty::unit(), i},
             {"write", o, Ty::unit()}};
  sig.state = s;
  sig.input = i;
  sig.output = o;
  return sig;
}

Signature sig_genrec(Ty a, Ty b) {
  Signature sig;
  sig.name = "genrec";
  sig.ops = {{"call", std::move(a), std::move(b)}};
  return sig;
}

Signature sig_free(std::string name, std::vector<OpDecl> ops) {
  Signature sig;
  sig.name = std::move(name);
  sig.ops = std::move(ops);
  return sig;
}

} // namespace effver::effects
