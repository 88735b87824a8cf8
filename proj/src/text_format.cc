#include "pg/text_format.hh"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "pg/errors.hh"

namespace pg {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
    bool quoted;
};

bool is_lowercase_word(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::islower(c); });
}

bool is_nonterminal_name(const std::string& s) {
    if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) || c == '"' || c == '#' || c == '|';
    });
}

std::vector<Token> tokenize_line(const std::string& line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = line[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '#') break;
        int column = static_cast<int>(i) + 1;
        if (c == '"') {
            std::size_t close = line.find('"', i + 1);
            if (close == std::string::npos)
                throw ParseError(line_no, column, "unterminated quoted terminal");
            tokens.push_back({line.substr(i + 1, close - i - 1), line_no, column, true});
            i = close + 1;
        } else {
            std::size_t end = i;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
                   line[end] != '"' && line[end] != '#')
                ++end;
            tokens.push_back({line.substr(i, end - i), line_no, column, false});
            i = end;
        }
    }
    return tokens;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ProhibitionGrammar run() {
        std::istringstream in(text_);
        std::string line;
        while (std::getline(in, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            handle_line(tokenize_line(line, line_no_));
        }
        close_section();
        if (!positive_)
            throw ParseError(line_no_ + 1, 1, "missing %positive section");
        ProhibitionGrammar pg;
        pg.positive = std::move(*positive_);
        if (negative_) {
            pg.negative = std::move(*negative_);
        } else {
            pg.negative.alphabet = pg.positive.alphabet;
            pg.negative.nonterminals = {pg.positive.start};
            pg.negative.start = pg.positive.start;
        }
        return pg;
    }

  private:
    void handle_line(const std::vector<Token>& tokens) {
        if (tokens.empty()) return;
        const Token& head = tokens[0];
        if (!head.quoted && head.text == "%alphabet") {
            if (current_)
                throw ParseError(head.line, head.column, "%alphabet must precede the sections");
            for (std::size_t i = 1; i < tokens.size(); ++i) add_terminal(tokens[i]);
        } else if (!head.quoted && (head.text == "%positive" || head.text == "%negative")) {
            if (tokens.size() > 1)
                throw ParseError(tokens[1].line, tokens[1].column,
                                 "unexpected token after " + head.text);
            open_section(head);
        } else if (!head.quoted && head.text == "%start") {
            handle_start(tokens);
        } else if (!head.quoted && !head.text.empty() && head.text[0] == '%') {
            throw ParseError(head.line, head.column, "unknown directive " + head.text);
        } else {
            handle_production(tokens);
        }
    }

    void add_terminal(const Token& t) {
        if (!t.quoted && !is_lowercase_word(t.text))
            throw ParseError(t.line, t.column,
                             "terminal " + t.text + " must be a lowercase word or quoted");
        if (t.text == "eps")
            throw ParseError(t.line, t.column, "eps is reserved for the empty word");
        if (t.text.empty())
            throw ParseError(t.line, t.column, "empty terminal");
        alphabet_.insert(t.text);
    }

    void open_section(const Token& head) {
        bool negative = head.text == "%negative";
        if (negative && !positive_seen_)
            throw ParseError(head.line, head.column, "%negative section before %positive");
        if ((negative && negative_seen_) || (!negative && positive_seen_))
            throw ParseError(head.line, head.column, "duplicate " + head.text + " section");
        close_section();
        current_.emplace();
        current_->alphabet = alphabet_;
        current_negative_ = negative;
        section_line_ = head.line;
        start_seen_ = false;
        (negative ? negative_seen_ : positive_seen_) = true;
    }

    void close_section() {
        if (!current_) return;
        if (!start_seen_)
            throw ParseError(section_line_, 1, std::string("missing %start in ") +
                                                   (current_negative_ ? "%negative" : "%positive") +
                                                   " section");
        (current_negative_ ? negative_ : positive_) = std::move(*current_);
        current_.reset();
    }

    void handle_start(const std::vector<Token>& tokens) {
        const Token& head = tokens[0];
        if (!current_)
            throw ParseError(head.line, head.column, "%start outside of a section");
        if (start_seen_)
            throw ParseError(head.line, head.column, "duplicate %start in section");
        if (!current_->productions.empty())
            throw ParseError(head.line, head.column, "%start must precede the productions");
        if (tokens.size() != 2)
            throw ParseError(head.line, head.column, "expected exactly one nonterminal after %start");
        const Token& name = tokens[1];
        if (name.quoted || !is_nonterminal_name(name.text))
            throw ParseError(name.line, name.column, "start symbol must be a nonterminal");
        register_nonterminal(name);
        current_->start = name.text;
        start_seen_ = true;
    }

    void register_nonterminal(const Token& t) {
        if (alphabet_.count(t.text))
            throw ParseError(t.line, t.column,
                             "symbol " + t.text + " declared as both terminal and nonterminal");
        current_->nonterminals.insert(t.text);
    }

    Symbol to_symbol(const Token& t) {
        if (t.quoted || is_lowercase_word(t.text)) {
            if (!alphabet_.count(t.text))
                throw ParseError(t.line, t.column, "undeclared symbol " + t.text);
            return terminal(t.text);
        }
        if (is_nonterminal_name(t.text)) {
            register_nonterminal(t);
            return nonterminal(t.text);
        }
        throw ParseError(t.line, t.column, "invalid symbol " + t.text);
    }

    void handle_production(const std::vector<Token>& tokens) {
        const Token& head = tokens[0];
        if (!current_)
            throw ParseError(head.line, head.column, "production outside of a section");
        if (!start_seen_)
            throw ParseError(head.line, head.column, "%start must precede the productions");

        std::size_t arrow = tokens.size();
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!tokens[i].quoted && tokens[i].text == "->") {
                if (arrow != tokens.size())
                    throw ParseError(tokens[i].line, tokens[i].column, "multiple -> in production");
                arrow = i;
            }
        }
        if (arrow == tokens.size())
            throw ParseError(head.line, head.column, "expected -> in production");
        if (arrow == 0)
            throw ParseError(head.line, head.column, "empty left-hand side");

        std::vector<Symbol> lhs;
        for (std::size_t i = 0; i < arrow; ++i) {
            const Token& t = tokens[i];
            if (!t.quoted && t.text == "eps")
                throw ParseError(t.line, t.column, "eps may not appear on the left-hand side");
            if (!t.quoted && t.text == "|")
                throw ParseError(t.line, t.column, "unexpected | on the left-hand side");
            lhs.push_back(to_symbol(t));
        }
        bool has_nonterminal = std::any_of(lhs.begin(), lhs.end(), [](const Symbol& s) {
            return s.kind == SymbolKind::Nonterminal;
        });
        if (!has_nonterminal)
            throw ParseError(head.line, head.column, "left-hand side needs at least one nonterminal");

        std::vector<std::vector<Token>> alternatives(1);
        for (std::size_t i = arrow + 1; i < tokens.size(); ++i) {
            if (!tokens[i].quoted && tokens[i].text == "|")
                alternatives.emplace_back();
            else
                alternatives.back().push_back(tokens[i]);
        }
        const Token& tail = tokens.back();
        for (const auto& alt : alternatives) {
            if (alt.empty())
                throw ParseError(tail.line, tail.column,
                                 "empty alternative (use eps for the empty word)");
            std::vector<Symbol> rhs;
            if (alt.size() == 1 && !alt[0].quoted && alt[0].text == "eps") {
                // empty right-hand side
            } else {
                for (const Token& t : alt) {
                    if (!t.quoted && t.text == "eps")
                        throw ParseError(t.line, t.column, "eps may appear only alone");
                    rhs.push_back(to_symbol(t));
                }
            }
            current_->productions.push_back({lhs, std::move(rhs)});
        }
    }

    const std::string& text_;
    int line_no_ = 0;
    std::set<std::string> alphabet_;
    std::optional<Grammar> current_;
    std::optional<Grammar> positive_;
    std::optional<Grammar> negative_;
    bool current_negative_ = false;
    bool positive_seen_ = false;
    bool negative_seen_ = false;
    bool start_seen_ = false;
    int section_line_ = 0;
};

std::string render_terminal(const std::string& t) {
    if (t.empty() || t == "eps" || t.find('"') != std::string::npos ||
        t.find('\n') != std::string::npos)
        throw Error("terminal " + t + " is not serializable");
    if (is_lowercase_word(t)) return t;
    return '"' + t + '"';
}

std::string render_symbol(const Symbol& s) {
    if (s.kind == SymbolKind::Terminal) return render_terminal(s.name);
    if (!is_nonterminal_name(s.name) || s.name.find("->") != std::string::npos)
        throw Error("nonterminal " + s.name + " is not serializable");
    return s.name;
}

void render_section(std::ostringstream& out, const char* directive, const Grammar& g) {
    out << directive << '\n';
    out << "%start " << render_symbol(nonterminal(g.start)) << '\n';
    for (std::size_t i = 0; i < g.productions.size();) {
        const std::vector<Symbol>& lhs = g.productions[i].lhs;
        for (std::size_t k = 0; k < lhs.size(); ++k) out << (k ? " " : "") << render_symbol(lhs[k]);
        out << " ->";
        bool first_alt = true;
        for (; i < g.productions.size() && g.productions[i].lhs == lhs; ++i) {
            out << (first_alt ? " " : " | ");
            first_alt = false;
            const std::vector<Symbol>& rhs = g.productions[i].rhs;
            if (rhs.empty()) {
                out << "eps";
            } else {
                for (std::size_t k = 0; k < rhs.size(); ++k)
                    out << (k ? " " : "") << render_symbol(rhs[k]);
            }
        }
        out << '\n';
    }
}

}  // namespace

ProhibitionGrammar parse_grammar_file(const std::string& text) { return Parser(text).run(); }

std::string serialize(const ProhibitionGrammar& pg) {
    std::ostringstream out;
    out << "%alphabet";
    for (const std::string& t : pg.positive.alphabet) out << ' ' << render_terminal(t);
    out << '\n';
    render_section(out, "%positive", pg.positive);
    const Grammar& n = pg.negative;
    bool synthesized_empty = n.productions.empty() && n.start == pg.positive.start &&
                             n.nonterminals == std::set<std::string>{pg.positive.start};
    if (!synthesized_empty) render_section(out, "%negative", n);
    return out.str();
}

std::string serialize(const Grammar& g) {
    ProhibitionGrammar pg;
    pg.negative.alphabet = g.alphabet;
    pg.negative.nonterminals = {g.start};
    pg.negative.start = g.start;
    pg.positive = g;
    return serialize(pg);
}

Word parse_word(const std::string& text, const std::set<std::string>& alphabet) {
    std::istringstream in(text);
    Word w;
    std::string token;
    while (in >> token) w.push_back(token);
    if (w.size() == 1 && w[0] == "eps") w.clear();
    for (const std::string& t : w) {
        if (t == "eps") throw AlphabetError("eps may appear only alone");
        if (!alphabet.count(t)) throw AlphabetError("symbol " + t + " is not in the alphabet");
    }
    return w;
}

}  // namespace pg
