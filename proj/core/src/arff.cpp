#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "netfex/dataset.hpp"

namespace netfex {

namespace {

bool needs_quoting(const std::string& s) {
    if (s.empty() || s == "?") return true;
    return s.find_first_of(" \t,{}%'\"\\") != std::string::npos;
}

std::string arff_token(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'' || c == '\\') quoted += '\\';
        quoted += c;
    }
    quoted += '\'';
    return quoted;
}

[[noreturn]] void arff_fail(int line_no, const std::string& what) {
    throw std::runtime_error("arff line " + std::to_string(line_no) + ": " + what);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

struct ArffToken {
    std::string text;
    bool quoted = false;
};

// Splits a comma-separated ARFF payload (data row or nominal domain),
// honoring single-quoted tokens with backslash escapes. Quotedness is kept
// so a literal '?' can be told apart from the missing marker.
std::vector<ArffToken> split_arff(const std::string& text, int line_no) {
    std::vector<ArffToken> tokens;
    std::string cur;
    bool quoted = false, was_quoted = false;
    auto flush = [&]() {
        if (!was_quoted) {
            std::size_t b = cur.find_first_not_of(" \t");
            std::size_t e = cur.find_last_not_of(" \t");
            cur = b == std::string::npos ? "" : cur.substr(b, e - b + 1);
        }
        tokens.push_back({cur, was_quoted});
        cur.clear();
        was_quoted = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '\\' && i + 1 < text.size()) {
                cur += text[++i];
            } else if (c == '\'') {
                quoted = false;
                was_quoted = true;
            } else {
                cur += c;
            }
        } else if (c == '\'' && cur.find_first_not_of(" \t") == std::string::npos) {
            cur.clear();
            quoted = true;
        } else if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    if (quoted) arff_fail(line_no, "unterminated quoted token");
    flush();
    return tokens;
}

}  // namespace

void write_arff(const FeatureMatrix& m, const std::string& relation, std::ostream& out) {
    for (const auto& [key, value] : m.provenance) {
        out << "% " << key << " = " << value << "\n";
    }
    out << "@RELATION " << arff_token(relation) << "\n";
    for (const auto& col : m.columns) {
        out << "@ATTRIBUTE " << arff_token(col.name) << " ";
        if (col.kind == ColumnKind::numeric) {
            out << "NUMERIC";
        } else {
            out << "{";
            for (std::size_t i = 0; i < col.domain.size(); ++i) {
                if (i > 0) out << ",";
                out << arff_token(col.domain[i]);
            }
            out << "}";
        }
        out << "\n";
    }
    out << "@DATA\n";
    for (const auto& row : m.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ",";
            if (is_missing(row[c])) {
                out << "?";
            } else if (is_numeric(row[c])) {
                out << format_double(as_numeric(row[c]));
            } else {
                out << arff_token(as_nominal(row[c]));
            }
        }
        out << "\n";
    }
}

void write_arff_file(const FeatureMatrix& m, const std::string& relation, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    write_arff(m, relation, out);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

FeatureMatrix read_arff(std::istream& in) {
    FeatureMatrix m;
    m.columns.clear();
    std::string line;
    int line_no = 0;
    bool in_data = false;
    bool saw_relation = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (!in_data) {
            if (line[0] == '%') {
                std::string body = line.substr(1);
                std::size_t eq = body.find('=');
                if (eq != std::string::npos) {
                    auto trim = [](std::string s) {
                        std::size_t b = s.find_first_not_of(" \t");
                        if (b == std::string::npos) return std::string();
                        std::size_t e = s.find_last_not_of(" \t");
                        return s.substr(b, e - b + 1);
                    };
                    m.provenance.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
                }
                continue;
            }
            std::size_t sp = line.find_first_of(" \t");
            std::string directive = lower(sp == std::string::npos ? line : line.substr(0, sp));
            std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
            if (directive == "@relation") {
                m.relation = split_arff(rest, line_no).at(0).text;
                saw_relation = true;
            } else if (directive == "@attribute") {
                std::size_t b = rest.find_first_not_of(" \t");
                if (b == std::string::npos) arff_fail(line_no, "empty attribute declaration");
                rest = rest.substr(b);
                std::string name;
                std::size_t pos = 0;
                if (rest[0] == '\'') {
                    pos = 1;
                    while (pos < rest.size() && rest[pos] != '\'') {
                        if (rest[pos] == '\\' && pos + 1 < rest.size()) {
                            name += rest[pos + 1];
                            pos += 2;
                        } else {
                            name += rest[pos++];
                        }
                    }
                    if (pos >= rest.size()) arff_fail(line_no, "unterminated attribute name");
                    ++pos;
                } else {
                    while (pos < rest.size() && rest[pos] != ' ' && rest[pos] != '\t') {
                        name += rest[pos++];
                    }
                }
                std::size_t tb = rest.find_first_not_of(" \t", pos);
                if (tb == std::string::npos) arff_fail(line_no, "missing attribute type");
                std::string type = rest.substr(tb);
                FeatureColumn col;
                col.name = name;
                if (type[0] == '{') {
                    std::size_t close = type.rfind('}');
                    if (close == std::string::npos) arff_fail(line_no, "unterminated nominal domain");
                    col.kind = ColumnKind::nominal;
                    for (auto& tok : split_arff(type.substr(1, close - 1), line_no)) {
                        col.domain.push_back(std::move(tok.text));
                    }
                } else {
                    std::string t = lower(type);
                    if (t != "numeric" && t != "real" && t != "integer") {
                        arff_fail(line_no, "unsupported attribute type '" + type + "'");
                    }
                    col.kind = ColumnKind::numeric;
                }
                m.columns.push_back(std::move(col));
            } else if (directive == "@data") {
                if (!saw_relation || m.columns.empty()) {
                    arff_fail(line_no, "@DATA before @RELATION/@ATTRIBUTE");
                }
                in_data = true;
            } else {
                arff_fail(line_no, "unknown directive '" + directive + "'");
            }
            continue;
        }

        if (line[0] == '%') continue;
        auto tokens = split_arff(line, line_no);
        if (tokens.size() != m.columns.size()) {
            arff_fail(line_no, "expected " + std::to_string(m.columns.size()) + " values, got " +
                                   std::to_string(tokens.size()));
        }
        std::vector<Value> row;
        row.reserve(tokens.size());
        for (std::size_t c = 0; c < tokens.size(); ++c) {
            const auto& [text, was_quoted] = tokens[c];
            if (text == "?" && !was_quoted) {
                row.push_back(missing_value());
            } else if (m.columns[c].kind == ColumnKind::numeric) {
                row.push_back(Value{parse_double(text)});
            } else {
                const auto& dom = m.columns[c].domain;
                if (std::find(dom.begin(), dom.end(), text) == dom.end()) {
                    arff_fail(line_no, "value '" + text + "' not in domain of '" +
                                           m.columns[c].name + "'");
                }
                row.push_back(Value{text});
            }
        }
        m.rows.push_back(std::move(row));
        m.row_ids.push_back(std::to_string(m.rows.size() - 1));
    }

    if (!in_data) {
        throw std::runtime_error("arff: missing @DATA section");
    }
    if (!m.columns.empty()) m.target = m.columns.back().name;
    return m;
}

FeatureMatrix read_arff_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return read_arff(in);
}

}  // namespace netfex
