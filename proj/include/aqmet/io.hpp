#pragma once

#include <string>
#include <vector>

#include "aqmet/evolve.hpp"
#include "aqmet/schedule.hpp"

// File formats shared by the CLI and the tests. All numbers are written
// with 12 significant digits so identical inputs give identical bytes.

namespace aqmet {

// %.12g formatting.
std::string format_number(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

CsvTable parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// header "s,a"
std::string schedule_to_csv(const Schedule& sch);
// header "i,bz,delta_t"
std::string plan_to_csv(const SegmentPlan& plan);
// header "i,ground_fidelity,purity"
std::string trace_to_csv(const EvolutionTrace& trace);

// JSON array of [re, im] pairs, row-major.
std::string state_to_json(const Matrix& state);
Matrix state_from_json(const std::string& text);

}  // namespace aqmet
