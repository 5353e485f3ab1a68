#include "kancat/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

#include "kancat/completion.hpp"

namespace kancat {

  namespace {

    [[noreturn]] void syntax(std::string const& msg, SourceLocation at) {
      throw Error(ErrorKind::syntax_error, msg, at);
    }

    [[noreturn]] void semantic(std::string const& msg, SourceLocation at) {
      throw Error(ErrorKind::semantic_error, msg, at);
    }

    // Runs f, giving any unlocated library error the location `at`.
    template <typename F>
    auto located(SourceLocation at, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.where()) {
          throw;
        }
        semantic(e.what(), at);
      }
    }

    bool is_name_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    enum class Tok { number, name, plus, minus, star, slash, caret, lpar, rpar, bar, eq, end };

    struct Token {
      Tok              kind;
      std::string_view text;
      SourceLocation   at;
    };

    std::vector<Token> lex(std::string_view text, SourceLocation at) {
      std::vector<Token> out;
      std::size_t        i = 0;
      auto               loc = [&](std::size_t pos) {
        return SourceLocation{at.line, at.column + pos};
      };
      while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
          }
          out.push_back({Tok::number, text.substr(start, i - start), loc(start)});
          continue;
        }
        if (is_name_start(c)) {
          while (i < text.size() && is_name_char(text[i])) {
            ++i;
          }
          out.push_back({Tok::name, text.substr(start, i - start), loc(start)});
          continue;
        }
        Tok kind;
        switch (c) {
          case '+': kind = Tok::plus; break;
          case '-': kind = Tok::minus; break;
          case '*': kind = Tok::star; break;
          case '/': kind = Tok::slash; break;
          case '^': kind = Tok::caret; break;
          case '(': kind = Tok::lpar; break;
          case ')': kind = Tok::rpar; break;
          case '|': kind = Tok::bar; break;
          case '=': kind = Tok::eq; break;
          default:
            syntax(std::string("unexpected character '") + c + "'", loc(start));
        }
        ++i;
        out.push_back({kind, text.substr(start, 1), loc(start)});
      }
      out.push_back({Tok::end, {}, loc(text.size())});
      return out;
    }

    struct Factor {
      bool             identity = false;
      std::string_view name;  // arrow, or object for an identity
      std::size_t      power = 1;
      SourceLocation   at;
    };

    struct RawTerm {
      Scalar                          coef = 1;
      std::optional<std::string_view> tag;
      bool                            bare = true;  // no product
      std::vector<Factor>             factors;
      SourceLocation                  at;
    };

    class PolyParser {
     public:
      PolyParser(std::string_view text, SourceLocation at)
          : _toks(lex(text, at)) {}

      std::vector<RawTerm> parse() {
        if (peek().kind == Tok::end) {
          syntax("empty polynomial", peek().at);
        }
        auto lhs = sum();
        if (peek().kind == Tok::eq) {
          next();
          auto rhs = sum();
          for (auto& t : rhs) {
            t.coef = -t.coef;
            lhs.push_back(std::move(t));
          }
        }
        if (peek().kind != Tok::end) {
          syntax("unexpected '" + std::string(peek().text) + "'", peek().at);
        }
        return lhs;
      }

     private:
      Token const& peek(std::size_t k = 0) const {
        return _toks[std::min(_pos + k, _toks.size() - 1)];
      }
      Token const& next() {
        return _toks[_pos++];
      }
      Token const& expect(Tok kind, char const* what) {
        if (peek().kind != kind) {
          syntax(std::string("expected ") + what, peek().at);
        }
        return next();
      }

      std::vector<RawTerm> sum() {
        std::vector<RawTerm> out;
        bool                 negate = false;
        if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
          negate = next().kind == Tok::minus;
        }
        while (true) {
          auto t = term();
          if (negate) {
            t.coef = -t.coef;
          }
          out.push_back(std::move(t));
          if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            negate = next().kind == Tok::minus;
            continue;
          }
          return out;
        }
      }

      bool at_identity() const {
        return peek().kind == Tok::number && peek(1).kind == Tok::lpar;
      }

      bool at_product() const {
        return peek().kind == Tok::name || at_identity();
      }

      std::size_t integer(Token const& t) {
        try {
          return std::stoul(std::string(t.text));
        } catch (std::exception const&) {
          syntax("integer out of range", t.at);
        }
      }

      RawTerm term() {
        RawTerm t;
        t.at = peek().at;
        if (peek().kind == Tok::number && !at_identity()) {
          auto const& num = next();
          std::string c(num.text);
          if (peek().kind == Tok::slash) {
            next();
            auto const& den = expect(Tok::number, "a denominator");
            c += "/" + std::string(den.text);
            if (std::all_of(den.text.begin(), den.text.end(), [](char d) { return d == '0'; })) {
              semantic("zero denominator", den.at);
            }
          }
          t.coef = Scalar::parse(c);
          if (peek().kind == Tok::star) {
            next();
            if (!at_product()) {
              syntax("expected a path after '*'", peek().at);
            }
          }
          if (!at_product()) {
            return t;
          }
        }
        if (!at_product()) {
          syntax("expected a term", peek().at);
        }
        if (peek().kind == Tok::name && peek(1).kind == Tok::bar) {
          t.tag = next().text;
          next();
          if (peek().kind == Tok::number && peek().text == "1" && peek(1).kind != Tok::lpar) {
            next();
            t.bare = false;
            return t;
          }
          if (!at_product()) {
            syntax("expected a path or 1 after '|'", peek().at);
          }
        }
        t.bare = false;
        while (true) {
          t.factors.push_back(factor());
          if (peek().kind == Tok::star) {
            next();
            continue;
          }
          return t;
        }
      }

      Factor factor() {
        Factor f;
        f.at = peek().at;
        if (at_identity()) {
          auto const& one = next();
          if (one.text != "1") {
            syntax("identities are written 1(OBJECT)", one.at);
          }
          next();
          f.identity = true;
          f.name     = expect(Tok::name, "an object name").text;
          expect(Tok::rpar, "')'");
          return f;
        }
        f.name = expect(Tok::name, "an arrow name").text;
        if (peek().kind == Tok::caret) {
          next();
          f.power = integer(expect(Tok::number, "an exponent"));
        }
        return f;
      }

      std::vector<Token> _toks;
      std::size_t        _pos = 0;
    };

    // Product of factors; nullopt for an empty product.
    std::optional<Path> product(Quiver const& q, std::vector<Factor> const& factors) {
      std::optional<Path> out;
      for (auto const& f : factors) {
        Path piece;
        if (f.identity) {
          auto o = q.find_object(f.name);
          if (!o) {
            semantic("unknown object '" + std::string(f.name) + "'", f.at);
          }
          piece = Path::identity(*o);
        } else {
          auto a = q.find_arrow(f.name);
          if (!a) {
            semantic("unknown arrow '" + std::string(f.name) + "'", f.at);
          }
          auto const&          arrow = q.arrow(*a);
          std::vector<ArrowId> arrows(f.power, *a);
          if (f.power == 0) {
            piece = Path::identity(arrow.src);
          } else {
            piece = located(f.at, [&] { return Path::of(q, arrows); });
          }
        }
        if (out) {
          out = located(f.at, [&] { return compose(*out, piece); });
        } else {
          out = std::move(piece);
        }
      }
      return out;
    }

  }  // namespace

  PathPolynomial parse_polynomial(std::string_view text,
                                  OrderPtr const&  order,
                                  SourceLocation   at) {
    auto const& q   = order->quiver();
    auto        raw = PolyParser(text, at).parse();

    std::vector<PathPolynomial::entry_type> terms;
    std::optional<HomType>                  shape;
    std::vector<RawTerm const*>             bare;
    for (auto const& t : raw) {
      if (t.tag) {
        semantic("tagged term in an untagged polynomial", t.at);
      }
      if (t.bare) {
        bare.push_back(&t);
        continue;
      }
      auto p = *product(q, t.factors);
      HomType h{p.src(), p.tgt()};
      if (shape && !(*shape == h)) {
        semantic("terms are not parallel", t.at);
      }
      shape = h;
      terms.emplace_back(std::move(p), t.coef);
    }
    if (!bare.empty()) {
      std::optional<ObjectId> o;
      if (shape) {
        if (shape->src != shape->tgt) {
          semantic("a scalar term needs terms from an object to itself", bare.front()->at);
        }
        o = shape->src;
      } else if (q.num_objects() == 1) {
        o = ObjectId{0};
      } else {
        semantic("cannot tell which identity a scalar term means; write 1(OBJECT)",
                 bare.front()->at);
      }
      shape = HomType{*o, *o};
      for (auto const* t : bare) {
        terms.emplace_back(Path::identity(*o), t->coef);
      }
    }
    return PathPolynomial::from_terms(order, *shape, std::move(terms));
  }

  TaggedPolynomial parse_tagged_polynomial(std::string_view      text,
                                           TaggedOrderPtr const& order,
                                           SourceLocation        at) {
    auto const& delta = order->delta();
    auto const& gamma = order->gamma();
    auto        raw   = PolyParser(text, at).parse();

    std::vector<TaggedPolynomial::entry_type> terms;
    std::optional<ObjectId>                   tgt;
    for (auto const& t : raw) {
      if (!t.tag) {
        semantic("untagged term in a tagged polynomial", t.at);
      }
      auto a = gamma.find_object(*t.tag);
      if (!a) {
        semantic("unknown tag '" + std::string(*t.tag) + "'", t.at);
      }
      TagId tag{a->value};
      auto  image = order->tag_object(tag);
      Path  p     = t.factors.empty() ? Path::identity(image) : *product(delta, t.factors);
      if (p.src() != image) {
        semantic("path does not start at the image of tag '" + std::string(*t.tag) + "'", t.at);
      }
      if (tgt && *tgt != p.tgt()) {
        semantic("terms do not share a target", t.at);
      }
      tgt = p.tgt();
      terms.emplace_back(TaggedTerm{tag, std::move(p)}, t.coef);
    }
    return TaggedPolynomial::from_terms(order, TaggedShape{*tgt}, std::move(terms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation files
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Line {
      std::string_view text;  // trimmed, comment removed
      SourceLocation   at;    // of text's first character
    };

    std::string_view trim(std::string_view s, std::size_t* skipped = nullptr) {
      std::size_t b = 0;
      while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      std::size_t e = s.size();
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      if (skipped) {
        *skipped = b;
      }
      return s.substr(b, e - b);
    }

    // Column of `part`, a view into `line`.
    SourceLocation at_part(Line const& line, std::string_view part) {
      return {line.at.line, line.at.column + std::size_t(part.data() - line.text.data())};
    }

    std::vector<std::string_view> words(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) {
          ++i;
        }
        std::size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') {
          ++i;
        }
        if (i > b) {
          out.push_back(s.substr(b, i - b));
        }
      }
      return out;
    }

    void check_name(Line const& line, std::string_view name) {
      if (name.empty() || !is_name_start(name.front())
          || !std::all_of(name.begin(), name.end(), is_name_char)) {
        syntax("invalid name '" + std::string(name) + "'", at_part(line, name));
      }
    }

    // "name : SRC -> TGT"
    struct ArrowLine {
      std::string_view name, src, tgt;
    };

    ArrowLine arrow_line(Line const& line) {
      auto colon = line.text.find(':');
      auto arrow = line.text.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
        syntax("expected 'name : SRC -> TGT'", line.at);
      }
      ArrowLine out{trim(line.text.substr(0, colon)),
                    trim(line.text.substr(colon + 1, arrow - colon - 1)),
                    trim(line.text.substr(arrow + 2))};
      check_name(line, out.name);
      check_name(line, out.src);
      check_name(line, out.tgt);
      return out;
    }

    std::shared_ptr<Quiver const> build_quiver(
        std::vector<std::pair<std::string_view, Line>> const& objects,
        std::vector<std::pair<ArrowLine, Line>> const&        arrows) {
      std::set<std::string_view>    names;
      std::set<std::string_view>    object_names;
      std::vector<std::string>      objs;
      std::vector<ArrowSpec>        specs;
      for (auto const& [name, line] : objects) {
        if (!names.insert(name).second) {
          semantic("duplicate name '" + std::string(name) + "'", at_part(line, name));
        }
        object_names.insert(name);
        objs.emplace_back(name);
      }
      for (auto const& [a, line] : arrows) {
        if (!names.insert(a.name).second) {
          semantic("duplicate name '" + std::string(a.name) + "'", at_part(line, a.name));
        }
        for (auto end : {a.src, a.tgt}) {
          if (!object_names.contains(end)) {
            semantic("unknown object '" + std::string(end) + "'", at_part(line, end));
          }
        }
        specs.push_back({std::string(a.name), std::string(a.src), std::string(a.tgt)});
      }
      return std::make_shared<Quiver const>(Quiver::make(objs, specs));
    }

    std::string const known_sections[] = {"objects", "arrows",  "order",  "relations", "gamma",
                                          "fmap",    "tagged",  "status", "provenance"};

  }  // namespace

  KanPresentation Presentation::kan() const {
    if (!gamma) {
      throw Error(ErrorKind::invalid_presentation, "no [gamma] section");
    }
    KanPresentation k{delta, gamma, relations, f_obj, f_arr};
    k.validate();
    return k;
  }

  RewriteSystem Presentation::system() const {
    return RewriteSystem(order, relations);
  }

  Presentation parse_presentation(std::string_view text) {
    std::map<std::string, std::vector<Line>, std::less<>> sections;
    std::string                                           current;
    std::size_t                                           number = 0;
    std::size_t                                           pos    = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto raw = text.substr(pos, end - pos);
      pos      = end + 1;
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      std::size_t skipped = 0;
      auto        body    = trim(raw, &skipped);
      Line        line{body, {number, skipped + 1}};
      if (body.empty()) {
        continue;
      }
      if (body.front() == '[') {
        if (body.back() != ']') {
          syntax("unterminated section header", line.at);
        }
        current = std::string(trim(body.substr(1, body.size() - 2)));
        if (std::find(std::begin(known_sections), std::end(known_sections), current)
            == std::end(known_sections)) {
          syntax("unknown section [" + current + "]", line.at);
        }
        sections[current];
        continue;
      }
      if (current.empty()) {
        syntax("content before the first section", line.at);
      }
      sections[current].push_back(line);
    }

    auto section = [&](std::string_view name) -> std::vector<Line> const& {
      static std::vector<Line> const none;
      auto                           it = sections.find(name);
      return it == sections.end() ? none : it->second;
    };

    Presentation p;

    if (!sections.contains("objects")) {
      semantic("missing [objects] section", {1, 1});
    }
    std::vector<std::pair<std::string_view, Line>> objects;
    for (auto const& line : section("objects")) {
      for (auto w : words(line.text)) {
        check_name(line, w);
        objects.emplace_back(w, line);
      }
    }
    std::vector<std::pair<ArrowLine, Line>> arrows;
    for (auto const& line : section("arrows")) {
      arrows.emplace_back(arrow_line(line), line);
    }
    p.delta = build_quiver(objects, arrows);

    auto const& order_lines = section("order");
    if (order_lines.size() > 1) {
      syntax("[order] takes a single line", order_lines[1].at);
    }
    if (order_lines.empty()) {
      p.order = make_deglex(p.delta);
    } else {
      auto const& line = order_lines.front();
      auto        text = line.text;
      if (text.substr(0, 6) != "deglex"
          || (text.size() > 6 && !std::isspace(static_cast<unsigned char>(text[6])))) {
        semantic("unsupported order '" + std::string(words(text).front()) + "'", line.at);
      }
      auto chain = trim(text.substr(6));
      if (chain.empty()) {
        p.order = make_deglex(p.delta);
      } else {
        bool                     ascending  = chain.find('>') == std::string_view::npos;
        char                     sep        = ascending ? '<' : '>';
        if (chain.find(ascending ? '>' : '<') != std::string_view::npos) {
          syntax("mixed '<' and '>' in [order]", at_part(line, chain));
        }
        std::vector<std::string> precedence;
        std::size_t              i = 0;
        while (i <= chain.size()) {
          auto j = chain.find(sep, i);
          if (j == std::string_view::npos) {
            j = chain.size();
          }
          auto name = trim(chain.substr(i, j - i));
          check_name(line, name);
          if (!p.delta->find_arrow(name)) {
            semantic("unknown arrow '" + std::string(name) + "'", at_part(line, name));
          }
          precedence.emplace_back(name);
          i = j + 1;
        }
        if (!ascending) {
          std::reverse(precedence.begin(), precedence.end());
        }
        p.order = located(line.at, [&] { return make_deglex(p.delta, precedence); });
      }
    }

    for (auto const& line : section("relations")) {
      p.relations.push_back(parse_polynomial(line.text, p.order, line.at));
    }

    if (sections.contains("gamma")) {
      std::vector<std::pair<std::string_view, Line>> gobjects;
      std::vector<std::pair<ArrowLine, Line>>        garrows;
      for (auto const& line : section("gamma")) {
        auto w = words(line.text);
        if (!w.empty() && w.front() == "objects" && line.text.find(':') == std::string_view::npos) {
          for (std::size_t k = 1; k < w.size(); ++k) {
            check_name(line, w[k]);
            gobjects.emplace_back(w[k], line);
          }
        } else {
          garrows.emplace_back(arrow_line(line), line);
        }
      }
      p.gamma = build_quiver(gobjects, garrows);

      std::vector<std::optional<ObjectId>>       fobj(p.gamma->num_objects());
      std::vector<std::optional<PathPolynomial>> farr(p.gamma->num_arrows());
      for (auto const& line : section("fmap")) {
        auto arrow = line.text.find("->");
        if (arrow == std::string_view::npos) {
          syntax("expected 'NAME -> IMAGE'", line.at);
        }
        auto lhs = trim(line.text.substr(0, arrow));
        auto rhs = trim(line.text.substr(arrow + 2));
        check_name(line, lhs);
        if (rhs.empty()) {
          syntax("missing image", at_part(line, line.text.substr(arrow)));
        }
        if (auto o = p.gamma->find_object(lhs)) {
          if (fobj[o->value]) {
            semantic("image of '" + std::string(lhs) + "' given twice", line.at);
          }
          check_name(line, rhs);
          auto image = p.delta->find_object(rhs);
          if (!image) {
            semantic("unknown object '" + std::string(rhs) + "'", at_part(line, rhs));
          }
          fobj[o->value] = *image;
        } else if (auto a = p.gamma->find_arrow(lhs)) {
          if (farr[a->value]) {
            semantic("image of '" + std::string(lhs) + "' given twice", line.at);
          }
          farr[a->value] = parse_polynomial(rhs, p.order, at_part(line, rhs));
        } else {
          semantic("unknown source name '" + std::string(lhs) + "'", line.at);
        }
      }
      SourceLocation where = section("fmap").empty() ? section("gamma").empty()
                                                           ? SourceLocation{1, 1}
                                                           : section("gamma").front().at
                                                     : section("fmap").front().at;
      for (std::uint32_t o = 0; o < fobj.size(); ++o) {
        if (!fobj[o]) {
          if (p.delta->num_objects() != 1) {
            semantic("no image for '" + p.gamma->object_name(ObjectId{o}) + "'", where);
          }
          fobj[o] = ObjectId{0};
        }
        p.f_obj.push_back(*fobj[o]);
      }
      for (std::uint32_t a = 0; a < farr.size(); ++a) {
        auto const& arrow = p.gamma->arrow(ArrowId{a});
        if (!farr[a]) {
          semantic("no image for '" + arrow.name + "'", where);
        }
        auto const& f = *farr[a];
        if (f.shape().src != p.f_obj[arrow.src.value] || f.shape().tgt != p.f_obj[arrow.tgt.value]) {
          semantic("image of '" + arrow.name + "' does not match the images of its endpoints",
                   where);
        }
        p.f_arr.push_back(f);
      }
      p.tagged_order = std::make_shared<TaggedOrder const>(p.order, p.gamma, p.f_obj);
    } else if (sections.contains("fmap")) {
      semantic("[fmap] without [gamma]", section("fmap").empty() ? SourceLocation{1, 1}
                                                                 : section("fmap").front().at);
    }

    for (auto const& line : section("tagged")) {
      if (!p.tagged_order) {
        semantic("[tagged] without [gamma]", line.at);
      }
      p.tagged.push_back(parse_tagged_polynomial(line.text, p.tagged_order, line.at));
    }

    auto const& status = section("status");
    if (status.size() > 1) {
      syntax("[status] takes a single line", status[1].at);
    }
    if (!status.empty()) {
      if (status.front().text == "complete") {
        p.status = Status::complete;
      } else if (status.front().text == "candidate") {
        p.status = Status::candidate;
      } else {
        semantic("status must be 'complete' or 'candidate'", status.front().at);
      }
    }

    for (auto const& line : section("provenance")) {
      auto eq = line.text.find('=');
      if (eq == std::string_view::npos) {
        syntax("expected 'key = value'", line.at);
      }
      p.provenance[std::string(trim(line.text.substr(0, eq)))]
          = std::string(trim(line.text.substr(eq + 1)));
    }
    return p;
  }

  namespace {

    void print_quiver_body(std::ostringstream& out, Quiver const& q) {
      for (auto const& a : q.arrows()) {
        out << a.name << " : " << q.object_name(a.src) << " -> " << q.object_name(a.tgt)
            << '\n';
      }
    }

    std::string join_objects(Quiver const& q) {
      std::string s;
      for (auto const& o : q.object_names()) {
        s += (s.empty() ? "" : " ") + o;
      }
      return s;
    }

  }  // namespace

  std::string print_presentation(Presentation const& p) {
    std::ostringstream out;
    auto const&        q = *p.delta;
    out << "[objects]\n" << join_objects(q) << '\n';
    if (q.num_arrows() > 0) {
      out << "[arrows]\n";
      print_quiver_body(out, q);
      out << "[order]\ndeglex";
      std::string sep = " ";
      for (auto a : p.order->precedence()) {
        out << sep << q.arrow(a).name;
        sep = " < ";
      }
      out << '\n';
    }
    if (!p.relations.empty()) {
      out << "[relations]\n";
      for (auto const& r : p.relations) {
        out << to_string(r) << '\n';
      }
    }
    if (p.gamma) {
      out << "[gamma]\n";
      if (p.gamma->num_objects() > 0) {
        out << "objects " << join_objects(*p.gamma) << '\n';
      }
      print_quiver_body(out, *p.gamma);
      out << "[fmap]\n";
      for (std::uint32_t o = 0; o < p.f_obj.size(); ++o) {
        out << p.gamma->object_name(ObjectId{o}) << " -> " << q.object_name(p.f_obj[o]) << '\n';
      }
      for (std::uint32_t a = 0; a < p.f_arr.size(); ++a) {
        out << p.gamma->arrow(ArrowId{a}).name << " -> " << to_string(p.f_arr[a]) << '\n';
      }
    }
    if (!p.tagged.empty()) {
      out << "[tagged]\n";
      for (auto const& t : p.tagged) {
        out << to_string(t) << '\n';
      }
    }
    if (p.status) {
      out << "[status]\n" << (*p.status == Status::complete ? "complete" : "candidate") << '\n';
    }
    if (!p.provenance.empty()) {
      out << "[provenance]\n";
      for (auto const& [k, v] : p.provenance) {
        out << k << " = " << v << '\n';
      }
    }
    return out.str();
  }

  bool same_presentation(Presentation const& a, Presentation const& b) {
    return print_presentation(a) == print_presentation(b);
  }

  std::string serialize_basis(RewriteSystem const&                      sys,
                              std::map<std::string, std::string> const& provenance) {
    Presentation p;
    p.delta = sys.order().quiver_ptr();
    p.order = sys.order_handle();
    for (auto const& r : sys.rules()) {
      p.relations.push_back(r.poly());
    }
    p.status     = sys.status();
    p.provenance = provenance;
    return print_presentation(p);
  }

  std::string serialize_basis(MixedSystem const&                        sys,
                              Presentation const&                       source,
                              std::map<std::string, std::string> const& provenance) {
    Presentation p = source;
    p.relations.clear();
    for (auto const& r : sys.e_rules().rules()) {
      p.relations.push_back(r.poly());
    }
    p.tagged.clear();
    for (auto const& r : sys.eps_rules()) {
      p.tagged.push_back(r.poly());
    }
    p.status     = sys.status();
    p.provenance = provenance;
    return print_presentation(p);
  }

  RewriteSystem load_basis(Presentation const& p) {
    auto sys = p.system();
    if (p.status == Status::complete && !is_groebner(sys)) {
      semantic("the rules are marked complete but are not a Gröbner basis", {1, 1});
    }
    return sys;
  }

  MixedSystem load_mixed_basis(Presentation const& p) {
    if (!p.tagged_order) {
      throw Error(ErrorKind::invalid_presentation, "no [gamma] section");
    }
    MixedSystem sys(p.tagged_order, p.relations, p.tagged);
    if (p.status == Status::complete && !is_groebner(sys)) {
      semantic("the rules are marked complete but are not a Gröbner basis", {1, 1});
    }
    return sys;
  }

}  // namespace kancat
