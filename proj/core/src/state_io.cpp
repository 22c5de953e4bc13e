#include "entlab/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_state(std::ostream& out, const PureState& state) {
  out << "n=" << state.n() << "\n";
  for (const auto& z : state.amplitudes()) {
    out << format_double(z.real()) << " " << format_double(z.imag()) << "\n";
  }
}

void write_state_file(const std::string& path, const PureState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_state(out, state);
}

PureState read_state(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    throw std::runtime_error("state file must start with an n=<int> header");
  }
  int n = 0;
  try {
    n = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("malformed qubit count in state header");
  }
  if (n < 1 || n > 30) throw std::runtime_error("state header n out of range");

  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Complex> amps;
  amps.reserve(dim);
  double re = 0.0, im = 0.0;
  while (amps.size() < dim && (in >> re >> im)) {
    amps.emplace_back(re, im);
  }
  if (amps.size() != dim) {
    throw std::runtime_error("state file ended before 2^n amplitudes");
  }
  return PureState(n, std::move(amps));
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_state(in);
}

}  // namespace entlab
