#include "membrane/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace membrane {

namespace {

constexpr const char* kHeader = "t,rho,psi,dpsi,z,I,omega_eff,Q_scale";

double parse_cell(const std::string& cell) {
  if (cell.empty()) return kNaN;
  std::size_t pos = 0;
  const double v = std::stod(cell, &pos);
  if (pos != cell.size()) {
    throw DomainError("profile csv: bad numeric cell '" + cell + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_double(double v, bool empty_nan) {
  if (std::isnan(v)) return empty_nan ? "" : "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string profile_to_csv(const Profile& profile) {
  std::ostringstream out;
  out << "# chart=" << to_string(profile.chart)
      << ";branch_sign=" << profile.branch_sign
      << ";rho0=" << format_double(profile.rho0)
      << ";c0=" << format_double(profile.params.c0)
      << ";lambda_t=" << format_double(profile.params.lambda_t)
      << ";p_t=" << format_double(profile.params.p_t)
      << ";omega0=" << format_double(profile.params.omega0)
      << ";kc=" << format_double(profile.params.kc)
      << ";kbar=" << format_double(profile.params.kbar)
      << ";termination=" << to_string(profile.termination)
      << ";tol=" << format_double(profile.tol)
      << ";steps_accepted=" << profile.steps_accepted
      << ";steps_rejected=" << profile.steps_rejected << "\n";
  out << kHeader << "\n";
  for (const ProfilePoint& p : profile.points) {
    out << format_double(p.t, true) << ',' << format_double(p.rho, true)
        << ',' << format_double(p.psi, true) << ','
        << format_double(p.dpsi, true) << ',' << format_double(p.z, true)
        << ',' << format_double(p.I, true) << ','
        << format_double(p.omega_eff, true) << ','
        << format_double(p.Q_scale, true) << "\n";
  }
  return out.str();
}

Profile profile_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw DomainError("profile csv: missing metadata comment line");
  }
  std::map<std::string, std::string> meta;
  for (const std::string& item : split(line.substr(2), ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw DomainError("profile csv: bad metadata item '" + item + "'");
    }
    meta[item.substr(0, eq)] = item.substr(eq + 1);
  }
  auto need = [&meta](const char* key) -> const std::string& {
    auto it = meta.find(key);
    if (it == meta.end()) {
      throw DomainError(std::string("profile csv: missing metadata '") +
                        key + "'");
    }
    return it->second;
  };

  Profile prof;
  prof.chart = chart_from_string(need("chart"));
  prof.branch_sign = static_cast<int>(parse_cell(need("branch_sign")));
  prof.rho0 = parse_cell(need("rho0"));
  const double kc = parse_cell(need("kc"));
  prof.params = reduced_params(parse_cell(need("c0")),
                               parse_cell(need("lambda_t")),
                               parse_cell(need("p_t")),
                               parse_cell(need("omega0")), kc);
  if (meta.count("kbar")) prof.params.kbar = parse_cell(meta.at("kbar"));
  prof.termination = termination_from_string(need("termination"));
  prof.tol = parse_cell(need("tol"));
  if (meta.count("steps_accepted")) {
    prof.steps_accepted =
        static_cast<long>(parse_cell(meta.at("steps_accepted")));
  }
  if (meta.count("steps_rejected")) {
    prof.steps_rejected =
        static_cast<long>(parse_cell(meta.at("steps_rejected")));
  }

  if (!std::getline(in, line) || line != kHeader) {
    throw DomainError("profile csv: missing column header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 8) {
      throw DomainError("profile csv: expected 8 columns");
    }
    ProfilePoint p;
    p.t = parse_cell(cells[0]);
    p.rho = parse_cell(cells[1]);
    p.psi = parse_cell(cells[2]);
    p.dpsi = parse_cell(cells[3]);
    p.z = parse_cell(cells[4]);
    p.I = parse_cell(cells[5]);
    p.omega_eff = parse_cell(cells[6]);
    p.Q_scale = parse_cell(cells[7]);
    prof.points.push_back(p);
  }
  return prof;
}

void write_profile_csv(const std::string& path, const Profile& profile) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << profile_to_csv(profile);
}

Profile read_profile_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_csv(buf.str());
}

}  // namespace membrane
