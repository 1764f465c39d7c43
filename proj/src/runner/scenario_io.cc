#include "dcc/runner/scenario_io.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace dcc::runner {
namespace {

struct Token {
  bool quoted = false;
  std::string text;
};

struct Value {
  bool is_list = false;
  std::vector<Token> items;
};

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw ConfigError(fmt::format("line {}: {}", line_, what));
  }

  Value ParseValue() {
    SkipSpace();
    Value v;
    if (Peek() == '[') {
      ++pos_;
      v.is_list = true;
      SkipSpace();
      if (Peek() == ']') {
        ++pos_;
      } else {
        while (true) {
          v.items.push_back(ParseToken());
          SkipSpace();
          if (Peek() == ',') {
            ++pos_;
            continue;
          }
          if (Peek() == ']') {
            ++pos_;
            break;
          }
          Fail("expected ',' or ']' in list");
        }
      }
    } else {
      v.items.push_back(ParseToken());
    }
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] != '#') Fail("trailing characters");
    return v;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void SkipSpace() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  Token ParseToken() {
    SkipSpace();
    Token t;
    if (Peek() == '"') {
      t.quoted = true;
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) Fail("unterminated string");
        const char c = text_[pos_++];
        if (c == '"') break;
        if (c == '\\') {
          if (pos_ >= text_.size()) Fail("dangling escape");
          const char e = text_[pos_++];
          switch (e) {
            case 'n': t.text += '\n'; break;
            case 't': t.text += '\t'; break;
            case '"': t.text += '"'; break;
            case '\\': t.text += '\\'; break;
            default: Fail(std::string("unknown escape \\") + e);
          }
          continue;
        }
        t.text += c;
      }
      return t;
    }
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
           text_[pos_] != '#' && text_[pos_] != ' ' && text_[pos_] != '\t' &&
           text_[pos_] != '\r') {
      ++pos_;
    }
    t.text = std::string(text_.substr(start, pos_ - start));
    if (t.text.empty()) Fail("missing value");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

class Reader {
 public:
  Reader(const std::string& key, const Value& v, int line)
      : key_(key), v_(v), line_(line) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw ConfigError(fmt::format("line {}: {}: {}", line_, key_, what));
  }

  const Token& Scalar() const {
    if (v_.is_list || v_.items.size() != 1) Fail("expected a single value");
    return v_.items.front();
  }

  double ToDouble(const Token& t) const {
    if (t.quoted) Fail("expected a number, got a string");
    errno = 0;
    char* end = nullptr;
    const double d = std::strtod(t.text.c_str(), &end);
    if (end != t.text.c_str() + t.text.size() || errno == ERANGE) {
      Fail("not a number: " + t.text);
    }
    return d;
  }

  std::int64_t ToInt(const Token& t) const {
    if (t.quoted) Fail("expected an integer, got a string");
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(t.text.c_str(), &end, 10);
    if (end != t.text.c_str() + t.text.size() || errno == ERANGE) {
      Fail("not an integer: " + t.text);
    }
    return v;
  }

  double Double() const { return ToDouble(Scalar()); }
  std::int64_t Int() const { return ToInt(Scalar()); }
  std::uint64_t Unsigned() const {
    const std::int64_t v = Int();
    if (v < 0) Fail("must be non-negative");
    return static_cast<std::uint64_t>(v);
  }
  std::uint32_t Unsigned32() const {
    const std::uint64_t v = Unsigned();
    if (v > 0xffffffffULL) Fail("out of range");
    return static_cast<std::uint32_t>(v);
  }
  bool Bool() const {
    const Token& t = Scalar();
    if (!t.quoted && t.text == "true") return true;
    if (!t.quoted && t.text == "false") return false;
    Fail("expected true or false");
  }
  std::string String() const {
    const Token& t = Scalar();
    if (!t.quoted) Fail("expected a quoted string");
    return t.text;
  }
  std::vector<std::string> Strings() const {
    std::vector<std::string> out;
    for (const Token& t : v_.items) {
      if (!t.quoted) Fail("expected quoted strings");
      out.push_back(t.text);
    }
    return out;
  }
  std::vector<double> Doubles() const {
    if (!v_.is_list) Fail("expected a list");
    std::vector<double> out;
    for (const Token& t : v_.items) out.push_back(ToDouble(t));
    return out;
  }

 private:
  const std::string& key_;
  const Value& v_;
  int line_;
};

void Apply(Scenario& s, const std::string& key, const Reader& r) {
  if (key == "name") s.name = r.String();
  else if (key == "description") s.description = r.String();
  else if (key == "capacity_mbps") s.capacity_mbps = r.Double();
  else if (key == "rtt_min_ms") s.rtt_min_ms = r.Double();
  else if (key == "buffer_bdp") s.buffer_bdp = r.Double();
  else if (key == "buffer_bytes") s.buffer_bytes = r.Unsigned();
  else if (key == "cca") s.cca = r.Strings();
  else if (key == "owqd_th_frac") s.owqd_th_frac = r.Double();
  else if (key == "owqd_th_us") s.owqd_th_us = r.Int();
  else if (key == "flows") s.flows = r.Unsigned32();
  else if (key == "flow_start_offsets_ms") s.flow_start_offsets_ms = r.Doubles();
  else if (key == "transfer_bytes") {
    s.transfer_bytes = r.Unsigned();
    s.duration_s.reset();
  } else if (key == "duration_s") {
    s.duration_s = r.Double();
    s.transfer_bytes.reset();
  }
  else if (key == "seed") s.seed = r.Unsigned();
  else if (key == "repetitions") s.repetitions = r.Unsigned32();
  else if (key == "packet_bytes") s.packet_bytes = r.Unsigned();
  else if (key == "pacing") s.pacing = r.Bool();
  else if (key == "pacing_interval_us") s.pacing_interval_us = r.Int();
  else if (key == "ack_ratio") s.ack_ratio = r.Unsigned32();
  else if (key == "start_jitter_us") s.start_jitter_us = r.Int();
  else if (key == "warmup_s") s.warmup_s = r.Double();
  else if (key == "receiver_offset_us") s.receiver_offset_us = r.Int();
  else if (key == "receiver_skew_ppm") s.receiver_skew_ppm = r.Double();
  else if (key == "max_sim_s") s.max_sim_s = r.Double();
  else r.Fail("unknown key");
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string Num(double d) { return fmt::format("{}", d); }

}  // namespace

Scenario ParseScenario(std::string_view text, Scenario base) {
  Scenario s = std::move(base);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", line_no));
    }
    const std::string key(Trim(line.substr(0, eq)));
    if (key.empty()) {
      throw ConfigError(fmt::format("line {}: missing key", line_no));
    }
    LineParser parser(line.substr(eq + 1), line_no);
    const Value value = parser.ParseValue();
    Apply(s, key, Reader(key, value, line_no));
  }
  return s;
}

Scenario LoadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseScenario(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string EmitScenario(const Scenario& s) {
  std::string out;
  auto put = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  put("name", Quote(s.name));
  put("description", Quote(s.description));
  put("capacity_mbps", Num(s.capacity_mbps));
  put("rtt_min_ms", Num(s.rtt_min_ms));
  put("buffer_bdp", Num(s.buffer_bdp));
  if (s.buffer_bytes) put("buffer_bytes", std::to_string(*s.buffer_bytes));
  {
    std::vector<std::string> q;
    for (const auto& c : s.cca) q.push_back(Quote(c));
    put("cca", fmt::format("[{}]", fmt::join(q, ", ")));
  }
  if (s.owqd_th_frac) put("owqd_th_frac", Num(*s.owqd_th_frac));
  if (s.owqd_th_us) put("owqd_th_us", std::to_string(*s.owqd_th_us));
  put("flows", std::to_string(s.flows));
  {
    std::vector<std::string> v;
    for (double d : s.flow_start_offsets_ms) v.push_back(Num(d));
    put("flow_start_offsets_ms", fmt::format("[{}]", fmt::join(v, ", ")));
  }
  if (s.transfer_bytes) put("transfer_bytes", std::to_string(*s.transfer_bytes));
  if (s.duration_s) put("duration_s", Num(*s.duration_s));
  put("seed", std::to_string(s.seed));
  put("repetitions", std::to_string(s.repetitions));
  put("packet_bytes", std::to_string(s.packet_bytes));
  put("pacing", s.pacing ? "true" : "false");
  put("pacing_interval_us", std::to_string(s.pacing_interval_us));
  put("ack_ratio", std::to_string(s.ack_ratio));
  put("start_jitter_us", std::to_string(s.start_jitter_us));
  put("warmup_s", Num(s.warmup_s));
  put("receiver_offset_us", std::to_string(s.receiver_offset_us));
  put("receiver_skew_ppm", Num(s.receiver_skew_ppm));
  put("max_sim_s", Num(s.max_sim_s));
  return out;
}

}  // namespace dcc::runner
