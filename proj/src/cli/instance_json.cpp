#include "g2maps/cli.hpp"

namespace g2maps::cli {

namespace {

std::string escape_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

/// A JSON value together with its pointer, so every error names its location.
struct Node {
    const json& value;
    std::string ptr;

    [[noreturn]] void fail(const std::string& what) const { throw ValidationError(ptr.empty() ? "/" : ptr, what); }

    Node at(const std::string& key) const {
        if (!value.is_object()) fail("expected an object");
        auto it = value.find(key);
        if (it == value.end()) Node{value, ptr + "/" + escape_token(key)}.fail("missing required field");
        return {*it, ptr + "/" + escape_token(key)};
    }
    std::optional<Node> maybe(const std::string& key) const {
        if (!value.is_object()) fail("expected an object");
        auto it = value.find(key);
        if (it == value.end()) return std::nullopt;
        return Node{*it, ptr + "/" + escape_token(key)};
    }
    Node at(std::size_t i) const { return {value.at(i), ptr + "/" + std::to_string(i)}; }

    const json& array() const {
        if (!value.is_array()) fail("expected an array");
        return value;
    }
    const json& object() const {
        if (!value.is_object()) fail("expected an object");
        return value;
    }
    std::string string() const {
        if (!value.is_string()) fail("expected a string");
        return value.get<std::string>();
    }
    Rational rational() const {
        if (!value.is_string()) fail("rationals are written as \"p/q\" strings");
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    std::vector<Rational> rationals(std::optional<std::size_t> size = std::nullopt) const {
        array();
        if (size && value.size() != *size) fail("expected " + std::to_string(*size) + " entries");
        std::vector<Rational> out;
        for (std::size_t i = 0; i < value.size(); ++i) out.push_back(at(i).rational());
        return out;
    }
    unsigned positive() const {
        if (!value.is_number_integer() || value.get<long long>() < 1) fail("expected a positive integer");
        return value.get<unsigned>();
    }

    void only(std::initializer_list<const char*> keys) const {
        for (const auto& [k, v] : object().items()) {
            bool ok = false;
            for (const char* allowed : keys) ok = ok || k == allowed;
            if (!ok) Node{v, ptr + "/" + escape_token(k)}.fail("unknown field");
        }
    }
};

template <class F>
auto guarded(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        n.fail(e.what());
    }
}

P2Point point_of(const Node& n) {
    const auto c = n.rationals(3);
    return guarded(n, [&] { return P2Point({c[0], c[1], c[2]}); });
}

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

json point_json(const P2Point& p) { return rationals_json({p[0], p[1], p[2]}); }

std::vector<Rational> coefficient_list(const UnivariatePolynomial& p) {
    std::vector<Rational> out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coefficient(i));
    return out;
}

Attachment attachment_of(const Node& n) {
    n.only({"tail", "degree", "x", "y", "sheet"});
    Attachment a{n.at("tail").string(), n.at("degree").positive(), std::nullopt, false};
    const auto x = n.maybe("x");
    const auto y = n.maybe("y");
    const auto sheet = n.maybe("sheet");
    if (y && y->value == "generic") {
        if (x || sheet) y->fail("a generic attachment takes no coordinates");
        a.generic = true;
        return a;
    }
    if (!x) {
        if (y || sheet) n.fail("coordinates without x");
        return a;
    }
    if (x->value == "inf") {
        unsigned s = 0;
        if (sheet) {
            if (!sheet->value.is_number_unsigned() || sheet->value.get<unsigned>() > 1) sheet->fail("sheet is 0 or 1");
            s = sheet->value.get<unsigned>();
        }
        if (y && y->value != "weierstrass") y->fail("a point at infinity takes \"weierstrass\" or a sheet");
        a.point = CurvePoint::at_infinity(s);
        return a;
    }
    if (sheet) sheet->fail("sheet only applies at infinity");
    if (!y) n.fail("missing y");
    const Rational xv = x->rational();
    a.point = CurvePoint::affine(xv, y->value == "weierstrass" ? Rational(0) : y->rational());
    return a;
}

PlanarBranch branch_of(const Node& n) {
    n.only({"x", "y"});
    const auto x = n.at("x").rationals();
    const auto y = n.at("y").rationals();
    return guarded(n, [&] { return PlanarBranch(UnivariatePolynomial(x), UnivariatePolynomial(y)); });
}

}  // namespace

SmoothabilityInstance parse_instance(const json& doc) {
    const Node root{doc, ""};
    root.only({"schema", "family", "curve", "generic_attach", "attach", "image"});
    if (auto s = root.maybe("schema"); s && s->string() != kInstanceSchemaId)
        s->fail("unsupported schema '" + s->string() + "'");

    const Node fam = root.at("family");
    const std::string spec = fam.string();
    SmoothabilityInstance inst{guarded(fam, [&] { return parse_family_spec(spec); }), std::nullopt, {}, std::nullopt, {}};

    if (auto c = root.maybe("curve")) {
        c->only({"f"});
        const Node f = c->at("f");
        const auto coeffs = f.rationals();
        inst.curve = guarded(f, [&] { return HyperellipticCurve(UnivariatePolynomial(coeffs)); });
    }
    if (auto g = root.maybe("generic_attach")) {
        if (!g->value.is_boolean()) g->fail("expected a boolean");
        inst.generic_attach = g->value.get<bool>();
    }
    if (auto a = root.maybe("attach")) {
        a->array();
        for (std::size_t i = 0; i < a->value.size(); ++i) inst.attach.push_back(attachment_of(a->at(i)));
    }

    if (auto im = root.maybe("image")) {
        im->only({"germs", "lines", "conics", "cubic", "points", "tail_images", "double_covers"});
        ImageData& img = inst.image;
        if (auto g = im->maybe("germs"))
            for (const auto& [label, _] : g->object().items()) {
                const Node germ = g->at(label);
                germ.array();
                if (germ.value.empty()) germ.fail("a germ needs at least one branch");
                std::vector<PlanarBranch> branches;
                for (std::size_t i = 0; i < germ.value.size(); ++i) branches.push_back(branch_of(germ.at(i)));
                img.germs.emplace(label, std::move(branches));
            }
        if (auto l = im->maybe("lines"))
            for (const auto& [label, _] : l->object().items()) {
                const Node line = l->at(label);
                const auto c = line.rationals(3);
                img.lines.emplace(label, guarded(line, [&] { return ProjLine2({c[0], c[1], c[2]}); }));
            }
        if (auto q = im->maybe("conics"))
            for (const auto& [label, _] : q->object().items()) {
                const Node conic = q->at(label);
                const auto c = conic.rationals(6);
                img.conics.emplace(label, guarded(conic, [&] {
                                       return Conic2::from_coefficients({c[0], c[1], c[2], c[3], c[4], c[5]});
                                   }));
            }
        if (auto c = im->maybe("cubic")) {
            const std::string text = c->string();
            img.cubic = guarded(*c, [&] { return parse_polynomial(text, {"x", "y", "z"}); });
        }
        if (auto p = im->maybe("points"))
            for (const auto& [label, _] : p->object().items()) img.points.emplace(label, point_of(p->at(label)));
        if (auto t = im->maybe("tail_images"))
            for (const auto& [tail, _] : t->object().items()) img.tail_images.emplace(tail, t->at(tail).string());
        if (auto d = im->maybe("double_covers"))
            for (const auto& [component, _] : d->object().items()) {
                const Node cover = d->at(component);
                cover.only({"line", "branch_points"});
                DoubleCover dc{cover.at("line").string(), {}};
                if (auto b = cover.maybe("branch_points")) {
                    b->array();
                    for (std::size_t i = 0; i < b->value.size(); ++i) dc.branch_points.push_back(point_of(b->at(i)));
                }
                img.double_covers.emplace(component, std::move(dc));
            }
    }

    validate_instance(inst);
    return inst;
}

json instance_to_json(const SmoothabilityInstance& inst) {
    json doc = {{"schema", kInstanceSchemaId}, {"family", inst.family.to_spec()}};
    if (inst.curve) doc["curve"] = {{"f", rationals_json(coefficient_list(inst.curve->f()))}};
    if (inst.generic_attach) doc["generic_attach"] = *inst.generic_attach;
    json attach = json::array();
    for (const auto& a : inst.attach) {
        json e = {{"tail", a.tail}, {"degree", a.degree}};
        if (a.generic) e["y"] = "generic";
        if (a.point && a.point->is_infinite()) {
            e["x"] = "inf";
            e["sheet"] = a.point->sheet();
        } else if (a.point) {
            e["x"] = to_string(a.point->x());
            e["y"] = to_string(a.point->y());
        }
        attach.push_back(e);
    }
    doc["attach"] = attach;

    const ImageData& img = inst.image;
    json image = json::object();
    if (!img.germs.empty()) {
        json germs = json::object();
        for (const auto& [label, branches] : img.germs) {
            json list = json::array();
            for (const auto& b : branches)
                list.push_back({{"x", rationals_json(coefficient_list(b.x()))},
                                {"y", rationals_json(coefficient_list(b.y()))}});
            germs[label] = list;
        }
        image["germs"] = germs;
    }
    if (!img.lines.empty()) {
        json lines = json::object();
        for (const auto& [label, l] : img.lines) {
            const auto& c = l.coefficients();
            lines[label] = rationals_json({c[0], c[1], c[2]});
        }
        image["lines"] = lines;
    }
    if (!img.conics.empty()) {
        json conics = json::object();
        for (const auto& [label, q] : img.conics) {
            const Matrix3& m = q.matrix();
            conics[label] = rationals_json({m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2]});
        }
        image["conics"] = conics;
    }
    if (img.cubic) image["cubic"] = img.cubic->to_string();
    if (!img.points.empty()) {
        json points = json::object();
        for (const auto& [label, p] : img.points) points[label] = point_json(p);
        image["points"] = points;
    }
    if (!img.tail_images.empty()) image["tail_images"] = img.tail_images;
    if (!img.double_covers.empty()) {
        json covers = json::object();
        for (const auto& [component, dc] : img.double_covers) {
            json pts = json::array();
            for (const auto& p : dc.branch_points) pts.push_back(point_json(p));
            covers[component] = {{"line", dc.line}, {"branch_points", pts}};
        }
        image["double_covers"] = covers;
    }
    doc["image"] = image;
    return doc;
}

}  // namespace g2maps::cli
