#include "smhd/checkpoint.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "smhd/error.hpp"

namespace smhd {

namespace {

constexpr const char* kMagic = "smhd-checkpoint";
constexpr int kVersion = 1;

std::string hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double read_hex(std::istream& is) {
  std::string tok;
  if (!(is >> tok)) throw Error("checkpoint: unexpected end of file");
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw Error("checkpoint: bad number '" + tok + "'");
  return v;
}

void expect(std::istream& is, const std::string& word) {
  std::string tok;
  if (!(is >> tok) || tok != word) throw Error("checkpoint: expected '" + word + "', got '" + tok + "'");
}

void write_field(std::ostream& os, const char* name, const FieldVector& f) {
  os << "field " << name << ' ' << f.coeffs.size() << '\n';
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) os << hex(f.coeffs[i]) << '\n';
}

FieldVector read_field(std::istream& is, const char* name, const Space& space) {
  expect(is, "field");
  expect(is, name);
  long long n = -1;
  if (!(is >> n) || n != static_cast<long long>(space.num_dofs()))
    throw Error(std::string("checkpoint: field ") + name + " has the wrong size for this mesh");
  Vector c(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = read_hex(is);
  return FieldVector(space, std::move(c));
}

}  // namespace

void write_checkpoint(std::ostream& os, const MhdState& s, const OperatorContext& ctx) {
  os << kMagic << ' ' << kVersion << '\n';
  os << "mesh " << ctx.mesh().subdivisions() << '\n';
  os << "t " << hex(s.t) << '\n';
  os << "params " << hex(s.params.inv_re) << ' ' << hex(s.params.inv_rm) << ' ' << hex(s.params.sc) << ' '
     << hex(s.params.mu) << '\n';
  write_field(os, "u", s.u);
  write_field(os, "omega", s.omega);
  write_field(os, "j", s.j);
  write_field(os, "E", s.E);
  write_field(os, "H", s.H);
  write_field(os, "B", s.B);
  write_field(os, "P", s.P);
  os << "end\n";
}

void save_checkpoint(const std::string& path, const MhdState& state, const OperatorContext& ctx) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write checkpoint '" + path + "'");
  write_checkpoint(out, state, ctx);
  if (!out) throw Error("error while writing checkpoint '" + path + "'");
}

MhdState read_checkpoint(std::istream& is, const OperatorContext& ctx) {
  expect(is, kMagic);
  int version = 0;
  if (!(is >> version) || version != kVersion)
    throw Error("checkpoint: unsupported version " + std::to_string(version));
  expect(is, "mesh");
  int n = 0;
  if (!(is >> n) || n != ctx.mesh().subdivisions())
    throw Error("checkpoint: written for mesh n = " + std::to_string(n) + ", current mesh has n = " +
                std::to_string(ctx.mesh().subdivisions()));
  MhdState s;
  expect(is, "t");
  s.t = read_hex(is);
  expect(is, "params");
  s.params.inv_re = read_hex(is);
  s.params.inv_rm = read_hex(is);
  s.params.sc = read_hex(is);
  s.params.mu = read_hex(is);
  s.u = read_field(is, "u", ctx.nedelec());
  s.omega = read_field(is, "omega", ctx.nedelec());
  s.j = read_field(is, "j", ctx.nedelec());
  s.E = read_field(is, "E", ctx.nedelec());
  s.H = read_field(is, "H", ctx.nedelec());
  s.B = read_field(is, "B", ctx.rt());
  s.P = read_field(is, "P", ctx.lagrange());
  expect(is, "end");
  return s;
}

MhdState load_checkpoint(const std::string& path, const OperatorContext& ctx) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open checkpoint '" + path + "'");
  return read_checkpoint(in, ctx);
}

}  // namespace smhd
