#include <charconv>
#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

#include "alphadg/cli.hpp"
#include "alphadg/errors.hpp"

namespace alphadg::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_real(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v))
    throw InvalidInput("not a number: '" + s + "'");
  return v;
}

long to_long(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw InvalidInput("not an integer: '" + s + "'");
  return v;
}

bool to_bool(const std::string& s) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw InvalidInput("not a boolean: '" + s + "'");
}

double clean(double x) { return std::round(x * 1e12) / 1e12 + 0.0; }

// Progression a, a+s, ..., up to b inclusive (with slack for rounding).
void progression(double a, double b, double s, std::vector<double>& out) {
  if (!(s > 0)) throw InvalidInput("range step must be positive");
  if (b < a) throw InvalidInput("range end lies below its start");
  const long count = static_cast<long>(std::floor((b - a) / s + 1e-9)) + 1;
  if (count > 1000000) throw InvalidInput("range has too many values");
  for (long i = 0; i < count; ++i) out.push_back(clean(a + static_cast<double>(i) * s));
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw InvalidInput("unknown format '" + s + "' (json, csv, text)");
}

const char* to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

std::vector<std::string> apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  std::vector<std::string> keys;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "tol") {
        cfg.tol = to_real(value);
        if (!(cfg.tol > 0)) throw InvalidInput("tol must be positive");
      } else if (key == "max_iters") {
        cfg.max_iters = to_long(value);
        if (cfg.max_iters < 1) throw InvalidInput("max_iters must be positive");
      } else if (key == "workers") {
        cfg.workers = static_cast<int>(to_long(value));
        if (cfg.workers < 1) throw InvalidInput("workers must be at least 1");
      } else if (key == "long_runs") {
        cfg.long_runs = to_bool(value);
      } else if (key == "format") {
        cfg.format = parse_format(value);
      } else {
        throw InvalidInput("unknown key '" + key + "'");
      }
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    keys.push_back(key);
  }
  return keys;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split(s, ',')) {
    if (item.empty()) throw InvalidInput("empty item in list '" + s + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(to_long(item)));
      continue;
    }
    std::string rest = item.substr(dots + 2);
    long step = 1;
    if (auto slash = rest.find('/'); slash != std::string::npos) {
      step = to_long(rest.substr(slash + 1));
      rest.erase(slash);
    }
    const long a = to_long(item.substr(0, dots)), b = to_long(rest);
    if (step < 1) throw InvalidInput("range step must be positive");
    if (b < a) throw InvalidInput("range end lies below its start: '" + item + "'");
    if ((b - a) / step > 1000000) throw InvalidInput("range has too many values");
    for (long v = a; v <= b; v += step) out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& s) {
  const std::vector<std::string> items = split(s, ',');
  std::vector<double> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string& item = items[i];
    if (item.empty()) throw InvalidInput("empty item in list '" + s + "'");
    if (item == "...") {
      if (out.size() < 2 || i + 1 >= items.size())
        throw InvalidInput("'...' needs two values before it and one after");
      const double step = out[out.size() - 1] - out[out.size() - 2];
      const double last = out.back();
      const double end = to_real(items[++i]);
      out.pop_back();
      progression(last, end, step, out);
      continue;
    }
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(clean(to_real(item)));
      continue;
    }
    std::string rest = item.substr(dots + 2);
    const auto slash = rest.find('/');
    if (slash == std::string::npos) throw InvalidInput("real range needs a step: '" + item + "' (e.g. 0..0.9/0.05)");
    const double step = to_real(rest.substr(slash + 1));
    rest.erase(slash);
    progression(to_real(item.substr(0, dots)), to_real(rest), step, out);
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::string format_real(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace alphadg::cli
