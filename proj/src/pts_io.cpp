#include "uat/pts_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace uat {

namespace {

void collect_radicands(const Scalar& s, std::vector<BigInt>& out) {
  if (s.is_rational()) return;
  const BigInt& d = s.radicand();
  if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  collect_radicands(s.part_a(), out);
  collect_radicands(s.part_b(), out);
}

bool is_radicand(const BigInt& d) {
  return d > 1 && !mpz_perfect_square_p(d.get_mpz_t());
}

BigInt parse_radicand(const std::string& tok, int line_no) {
  if (tok.empty()) throw DataError("line " + std::to_string(line_no) + ": missing radicand");
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DataError("line " + std::to_string(line_no) + ": radicand must be a positive integer");
    }
  }
  BigInt d(tok, 10);
  if (!is_radicand(d)) {
    throw DataError("line " + std::to_string(line_no) + ": radicand must be a non-square integer above 1");
  }
  return d;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) toks.push_back(tok);
  return toks;
}

int strict_int(const std::string& tok) {
  if (tok.empty()) throw DataError("expected an integer");
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw DataError("expected an integer");
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw DataError("expected an integer");
  }
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw DataError("integer out of range");
  }
}

}  // namespace

PointSet read_points(std::istream& in) {
  PointSet ps;
  std::vector<BigInt> field;
  bool field_seen = false;
  bool parts_seen = false;
  bool data_seen = false;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.size() >= 1 && line.back() == '\r') line.pop_back();
    std::string body = line;
    const bool directive_candidate = !body.empty() && body[0] == '#';
    if (directive_candidate) {
      std::string rest = body.substr(1);
      const auto toks = split_tokens(rest);
      if (!toks.empty() && toks[0] == "field:") {
        if (field_seen) throw DataError("line " + std::to_string(line_no) + ": repeated field header");
        if (data_seen) throw DataError("line " + std::to_string(line_no) + ": field header after data");
        if (toks.size() == 2 && toks[1] == "rational") {
        } else if (toks.size() == 3 && toks[1] == "quad") {
          field.push_back(parse_radicand(toks[2], line_no));
        } else if (toks.size() == 4 && toks[1] == "tower") {
          field.push_back(parse_radicand(toks[2], line_no));
          field.push_back(parse_radicand(toks[3], line_no));
          if (!(field[0] < field[1])) {
            throw DataError("line " + std::to_string(line_no) + ": tower radicands must be strictly ascending");
          }
          BigInt prod = field[0] * field[1];
          if (mpz_perfect_square_p(prod.get_mpz_t())) {
            throw DataError("line " + std::to_string(line_no) + ": tower radicands have a square product");
          }
        } else {
          throw DataError("line " + std::to_string(line_no) + ": malformed field header");
        }
        field_seen = true;
        continue;
      }
      if (!toks.empty() && toks[0] == "parts:") {
        if (parts_seen) throw DataError("line " + std::to_string(line_no) + ": repeated parts header");
        if (data_seen) throw DataError("line " + std::to_string(line_no) + ": parts header after data");
        if (toks.size() != 2) throw DataError("line " + std::to_string(line_no) + ": malformed parts header");
        int n = 0;
        try {
          n = strict_int(toks[1]);
        } catch (const DataError&) {
          throw DataError("line " + std::to_string(line_no) + ": malformed parts header");
        }
        if (n < 1) throw DataError("line " + std::to_string(line_no) + ": parts must be at least 1");
        ps.num_parts = n;
        parts_seen = true;
        continue;
      }
      continue;  // plain comment
    }

    const auto hash_pos = body.find('#');
    if (hash_pos != std::string::npos) body = body.substr(0, hash_pos);
    const auto toks = split_tokens(body);
    if (toks.empty()) continue;

    if (!field_seen) throw DataError("line " + std::to_string(line_no) + ": point data before the field header");
    data_seen = true;
    const std::size_t want = parts_seen ? 3 : 2;
    if (toks.size() != want) {
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(want) +
                      " fields, got " + std::to_string(toks.size()));
    }

    Point2 p;
    try {
      p.x = Scalar::parse(toks[0]);
      p.y = Scalar::parse(toks[1]);
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    std::vector<BigInt> used;
    collect_radicands(p.x, used);
    collect_radicands(p.y, used);
    for (const BigInt& d : used) {
      if (std::find(field.begin(), field.end(), d) == field.end()) {
        throw DataError("line " + std::to_string(line_no) + ": coordinate lies outside the declared field");
      }
    }

    try {
      if (parts_seen) {
        ps.add(std::move(p), strict_int(toks[2]));
      } else {
        ps.add(std::move(p));
      }
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!field_seen) throw DataError("missing field header");
  return ps;
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open point file: " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  std::vector<BigInt> field;
  for (const Point2& p : ps.points) {
    collect_radicands(p.x, field);
    collect_radicands(p.y, field);
  }
  std::sort(field.begin(), field.end());
  if (field.size() > 2) throw DataError("point set spans more than two radicands");
  if (field.empty()) {
    out << "# field: rational\n";
  } else if (field.size() == 1) {
    out << "# field: quad " << field[0].get_str() << "\n";
  } else {
    out << "# field: tower " << field[0].get_str() << " " << field[1].get_str() << "\n";
  }
  if (ps.partitioned()) out << "# parts: " << ps.num_parts << "\n";
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    out << ps.points[i].x.str() << " " << ps.points[i].y.str();
    if (ps.partitioned()) out << " " << ps.parts[i];
    out << "\n";
  }
}

void write_points_file(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open output file: " + path);
  write_points(out, ps);
  if (!out.flush()) throw DataError("failed writing point file: " + path);
}

std::vector<Scalar> read_values(std::istream& in) {
  std::vector<Scalar> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 1) {
      throw DataError("line " + std::to_string(line_no) + ": expected one value per line");
    }
    try {
      out.push_back(Scalar::parse(toks[0]));
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Scalar> read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open value file: " + path);
  return read_values(in);
}

}  // namespace uat
