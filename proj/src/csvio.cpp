#include "rotwave/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rotwave/errors.hpp"

namespace rotwave {

namespace {

void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string trace_to_csv(const TraceSeries& trace) {
  std::string out =
      "t,E,Estar,l2u,l2v,gradu,gradv,lapu,lapv,wpot,"
      "acc_us,acc_grad_us,acc_lap_us,acc_u,acc_grad_u,acc_wpot_u,acc_lap_u,"
      "acc_Estar,acc_w_us,acc_w_grad_us,acc_w_grad_u,acc_w_wpot_u,"
      "e_balance_residual\n";
  out.reserve(out.size() + trace.samples.size() * 24 * 26);
  for (const TraceSample& s : trace.samples) {
    const EnergyRecord& r = s.rec;
    const double head[] = {r.t,    r.E,     r.Estar, r.l2u, r.l2v,
                           r.gradu, r.gradv, r.lapu,  r.lapv, r.wpot};
    bool first = true;
    for (double v : head) {
      if (!first) out += ',';
      first = false;
      append_g17(out, v);
    }
    for (double v : s.acc) {
      out += ',';
      append_g17(out, v);
    }
    out += ',';
    append_g17(out, s.e_balance_residual);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw IoError("error writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

}  // namespace rotwave
