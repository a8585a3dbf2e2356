#include <vnfdeploy/ilp.hpp>

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace vnfdeploy {

namespace {

constexpr std::size_t kLineWidth = 100;

std::string format_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Accumulates whitespace-separated tokens and wraps lines; continuation lines
// are indented so that no token ever starts in column 0.
class LineWriter
{
public:
    explicit LineWriter(std::string& out) : out_(out) {}

    void token(const std::string& t)
    {
        if (width_ > 0 && width_ + 1 + t.size() > kLineWidth) {
            out_ += "\n  ";
            width_ = 2;
        } else {
            out_ += ' ';
            ++width_;
        }
        out_ += t;
        width_ += t.size();
    }

    void end_line()
    {
        out_ += '\n';
        width_ = 0;
    }

private:
    std::string& out_;
    std::size_t width_ = 0;
};

void write_terms(LineWriter& w, const IlpModel& model, const std::vector<LinearTerm>& terms)
{
    if (terms.empty()) {
        w.token("0");
        return;
    }
    bool first = true;
    for (const LinearTerm& t : terms) {
        const bool negative = t.coef < 0.0;
        const double magnitude = negative ? -t.coef : t.coef;
        if (!first || negative) {
            w.token(negative ? "-" : "+");
        }
        if (magnitude != 1.0) {
            w.token(format_number(magnitude));
        }
        w.token(model.var_names[t.var]);
        first = false;
    }
}

const char* sense_token(Sense sense)
{
    switch (sense) {
    case Sense::less_equal:
        return "<=";
    case Sense::greater_equal:
        return ">=";
    case Sense::equal:
        return "=";
    }
    return "=";
}

double parse_number(const std::string& token)
{
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw lp_parse_error("expected a number, found '" + token + "'");
    }
    return value;
}

bool looks_numeric(const std::string& token)
{
    if (token.empty()) {
        return false;
    }
    const char c = token.front();
    return (c >= '0' && c <= '9') || c == '.' || ((c == '-' || c == '+') && token.size() > 1);
}

class Parser
{
public:
    explicit Parser(std::string_view text) { tokenize(text); }

    IlpModel parse()
    {
        expect_keyword("Minimize");
        parse_objective();
        expect_keyword("Subject");
        expect_keyword("To");
        while (pos_ < tokens_.size() && tokens_[pos_] != "Binaries" && tokens_[pos_] != "End") {
            parse_constraint();
        }
        if (pos_ < tokens_.size() && tokens_[pos_] == "Binaries") {
            ++pos_;
            while (pos_ < tokens_.size() && tokens_[pos_] != "End") {
                const std::size_t v = variable(tokens_[pos_++]);
                model_.binary[v] = true;
            }
        }
        expect_keyword("End");
        return std::move(model_);
    }

private:
    void tokenize(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.front() == '\\') {
                continue;
            }
            std::istringstream words(line);
            std::string w;
            while (words >> w) {
                tokens_.push_back(w);
            }
        }
    }

    const std::string& next()
    {
        if (pos_ >= tokens_.size()) {
            throw lp_parse_error("unexpected end of LP text");
        }
        return tokens_[pos_++];
    }

    void expect_keyword(const char* keyword)
    {
        const std::string& t = next();
        if (t != keyword) {
            throw lp_parse_error(std::string("expected '") + keyword + "', found '" + t + "'");
        }
    }

    std::size_t variable(const std::string& name)
    {
        if (const auto it = index_.find(name); it != index_.end()) {
            return it->second;
        }
        const std::size_t v = model_.var_names.size();
        model_.var_names.push_back(name);
        model_.binary.push_back(false);
        model_.objective.push_back(0.0);
        index_.emplace(name, v);
        return v;
    }

    static bool is_label(const std::string& t) { return t.size() > 1 && t.back() == ':'; }
    static bool is_sense(const std::string& t) { return t == "<=" || t == ">=" || t == "="; }

    // Reads "[+|-] [coef] var ..." until `stop` returns true for the next token.
    template <typename Stop>
    std::vector<LinearTerm> parse_terms(Stop stop)
    {
        std::vector<LinearTerm> terms;
        if (pos_ < tokens_.size() && tokens_[pos_] == "0") {
            ++pos_;
            return terms;
        }
        while (pos_ < tokens_.size() && !stop(tokens_[pos_])) {
            double sign = 1.0;
            if (tokens_[pos_] == "+" || tokens_[pos_] == "-") {
                sign = tokens_[pos_] == "-" ? -1.0 : 1.0;
                ++pos_;
            }
            double coef = 1.0;
            if (looks_numeric(tokens_.at(pos_))) {
                coef = parse_number(next());
            }
            terms.push_back({variable(next()), sign * coef});
        }
        return terms;
    }

    void parse_objective()
    {
        if (pos_ < tokens_.size() && is_label(tokens_[pos_])) {
            ++pos_;
        }
        const auto terms = parse_terms([](const std::string& t) { return t == "Subject"; });
        for (const LinearTerm& t : terms) {
            model_.objective[t.var] += t.coef;
        }
    }

    void parse_constraint()
    {
        const std::string label = next();
        if (!is_label(label)) {
            throw lp_parse_error("expected a constraint label, found '" + label + "'");
        }
        LinearConstraint row;
        row.name = label.substr(0, label.size() - 1);
        row.terms = parse_terms([](const std::string& t) { return is_sense(t); });
        const std::string& sense = next();
        row.sense = sense == "<=" ? Sense::less_equal : sense == ">=" ? Sense::greater_equal : Sense::equal;
        row.rhs = parse_number(next());
        model_.constraints.push_back(std::move(row));
    }

    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t, std::less<>> index_;
    IlpModel model_;
};

} // namespace

std::string emit_lp_text(const IlpModel& model)
{
    std::string out = "\\ vnfdeploy placement model\n";
    LineWriter w(out);

    out += "Minimize\n";
    w.token("obj:");
    std::vector<LinearTerm> objective;
    for (std::size_t v = 0; v < model.objective.size(); ++v) {
        if (model.objective[v] != 0.0) {
            objective.push_back({v, model.objective[v]});
        }
    }
    write_terms(w, model, objective);
    w.end_line();

    out += "Subject To\n";
    for (const LinearConstraint& row : model.constraints) {
        w.token(row.name + ":");
        write_terms(w, model, row.terms);
        w.token(sense_token(row.sense));
        w.token(format_number(row.rhs));
        w.end_line();
    }

    bool any_binary = false;
    for (std::size_t v = 0; v < model.var_names.size(); ++v) {
        if (model.binary[v]) {
            if (!any_binary) {
                out += "Binaries\n";
                any_binary = true;
            }
            w.token(model.var_names[v]);
            w.end_line();
        }
    }
    out += "End\n";
    return out;
}

IlpModel parse_lp_text(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace vnfdeploy
