#include "aqmet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace aqmet {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw std::runtime_error("csv row width differs from header");
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string schedule_to_csv(const Schedule& sch) {
  CsvTable t;
  t.header = {"s", "a"};
  for (size_t i = 0; i < sch.s.size(); ++i) {
    t.rows.push_back({format_number(sch.s[i]), format_number(sch.a[i])});
  }
  return t.to_string();
}

std::string plan_to_csv(const SegmentPlan& plan) {
  CsvTable t;
  t.header = {"i", "bz", "delta_t"};
  for (int i = 0; i < plan.segments(); ++i) {
    t.rows.push_back({std::to_string(i), format_number(plan.bz_list[i]),
                      format_number(plan.delta_t)});
  }
  return t.to_string();
}

std::string trace_to_csv(const EvolutionTrace& trace) {
  CsvTable t;
  t.header = {"i", "ground_fidelity", "purity"};
  for (const auto& step : trace.steps) {
    double purity = (step.state * step.state).trace().real();
    t.rows.push_back({std::to_string(step.index),
                      format_number(step.ground_fidelity),
                      format_number(purity)});
  }
  return t.to_string();
}

std::string state_to_json(const Matrix& state) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < state.rows(); ++r) {
    for (Eigen::Index c = 0; c < state.cols(); ++c) {
      entries.push_back({state(r, c).real(), state(r, c).imag()});
    }
  }
  nlohmann::json doc;
  doc["dim"] = state.rows();
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

Matrix state_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  Eigen::Index dim = doc.at("dim").get<Eigen::Index>();
  const auto& entries = doc.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    throw std::runtime_error("state entry count does not match dimension");
  }
  Matrix m(dim, dim);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++k) {
      m(r, c) = Complex(entries[k][0].get<double>(),
                        entries[k][1].get<double>());
    }
  }
  return m;
}

}  // namespace aqmet
