#include "flatjava/emitter.hpp"

#include <stdexcept>

#include "flatjava/flattener.hpp"

namespace flatjava {

using namespace ast;

void EmitOptions::validate() const {
    if (indent_width != 2 && indent_width != 4)
        throw std::invalid_argument("indent width must be 2 or 4");
    if (newline != "\n" && newline != "\r\n") throw std::invalid_argument("newline must be LF or CRLF");
}

namespace {

class ExprPrinter {
public:
    std::string out;

    void expr(const Expr& e) {
        std::visit([&](const auto& n) { node(n); }, e.node);
    }

private:
    void args(const std::vector<Expr>& as) {
        out += '(';
        for (std::size_t i = 0; i < as.size(); ++i) {
            if (i) out += ", ";
            expr(as[i]);
        }
        out += ')';
    }

    void receiver(ReceiverKind kind, const ExprBox& recv) {
        switch (kind) {
            case ReceiverKind::None: return;
            case ReceiverKind::This: out += "this."; return;
            case ReceiverKind::Super: out += "super."; return;
            case ReceiverKind::Expr:
                expr(*recv);
                out += '.';
                return;
        }
    }

    void node(const Literal& n) { out += n.lexeme; }
    void node(const Name& n) { out += n.ident; }
    void node(const ThisExpr&) { out += "this"; }
    void node(const FieldAccess& n) {
        receiver(n.receiver_kind, n.receiver);
        out += n.name;
    }
    void node(const Call& n) {
        receiver(n.receiver_kind, n.receiver);
        out += n.name;
        args(n.args);
    }
    void node(const New& n) {
        out += "new " + n.type.name;
        args(n.args);
    }
    void node(const NewArray& n) {
        out += "new " + n.element.name + "[";
        expr(*n.size);
        out += ']';
    }
    void node(const Unary& n) {
        if (n.postfix) {
            expr(*n.operand);
            out += n.op;
            return;
        }
        out += n.op;
        std::size_t mark = out.size();
        expr(*n.operand);
        // "- -x" must not collapse into "--x" (and likewise for '+').
        char last = n.op.back();
        if ((last == '-' || last == '+') && out.size() > mark && out[mark] == last) out.insert(mark, " ");
    }
    void node(const Binary& n) {
        expr(*n.lhs);
        out += ' ' + n.op + ' ';
        expr(*n.rhs);
    }
    void node(const Assign& n) {
        expr(*n.target);
        out += ' ' + n.op + ' ';
        expr(*n.value);
    }
    void node(const Paren& n) {
        out += '(';
        expr(*n.inner);
        out += ')';
    }
    void node(const Index& n) {
        expr(*n.array);
        out += '[';
        expr(*n.index);
        out += ']';
    }
};

std::string modifiers(const Modifiers& m) {
    std::string s;
    if (m.visibility != Visibility::Package) {
        s += to_string(m.visibility);
        s += ' ';
    }
    if (m.is_static) s += "static ";
    if (m.is_final) s += "final ";
    return s;
}

class Writer {
public:
    explicit Writer(const EmitOptions& o) : opts_(o) {}

    std::string out;

    void unit(const std::optional<std::string>& package, const ClassDecl& cls,
              std::span<const std::string> provenance, bool with_extends) {
        if (package) {
            out += "package " + *package + ";";
            nl();
            nl();
        }
        if (cls.visibility != Visibility::Package) {
            out += to_string(cls.visibility);
            out += ' ';
        }
        out += "class " + cls.name;
        if (with_extends && cls.superclass) out += " extends " + *cls.superclass;
        out += " {";
        nl();
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            if (i) nl();
            if (opts_.provenance && i < provenance.size() && !provenance[i].empty()) {
                indent(1);
                out += "// pulled from " + provenance[i];
                nl();
            }
            member(cls.members[i]);
        }
        out += "}";
        nl();
    }

private:
    const EmitOptions& opts_;

    void nl() { out += opts_.newline; }
    void indent(int level) { out.append(static_cast<std::size_t>(level * opts_.indent_width), ' '); }

    static std::string expr(const Expr& e) { return emit_expr(e); }

    static std::string params(const std::vector<Param>& ps) {
        std::string s = "(";
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ", ";
            s += ps[i].type.str() + " " + ps[i].name;
        }
        return s + ")";
    }

    void member(const Member& m) {
        indent(1);
        if (const auto* f = m.as<Field>()) {
            out += modifiers(f->mods) + f->type.str() + " " + f->name;
            if (f->init) out += " = " + expr(*f->init);
            out += ";";
            nl();
        } else if (const auto* md = m.as<Method>()) {
            out += modifiers(md->mods) + (md->return_type ? md->return_type->str() : "void") + " " + md->name +
                   params(md->params);
            body(md->body, 1);
            nl();
        } else if (const auto* c = m.as<Constructor>()) {
            out += modifiers(c->mods) + c->name + params(c->params);
            body(c->body, 1);
            nl();
        }
    }

    // Writes " {", the statements one level deeper, and the closing brace
    // without a trailing newline.
    void body(const Block& b, int level) {
        out += " {";
        nl();
        for (const Stmt& s : b.stmts) stmt(s, level + 1);
        indent(level);
        out += "}";
    }

    // Writes the statement that follows an `if (...)`, `else` or `while (...)`
    // header. Returns true when the output ends on a closing brace.
    bool branch(const Stmt& s, int level) {
        if (const auto* b = s.as<Block>()) {
            body(*b, level);
            return true;
        }
        nl();
        stmt(s, level + 1);
        return false;
    }

    void stmt(const Stmt& s, int level) {
        indent(level);
        stmt_inline(s, level);
    }

    void stmt_inline(const Stmt& s, int level) {
        if (const auto* v = s.as<LocalVar>()) {
            out += v->type.str() + " " + v->name;
            if (v->init) out += " = " + expr(*v->init);
            out += ";";
            nl();
        } else if (const auto* e = s.as<ExprStmt>()) {
            out += expr(e->expr) + ";";
            nl();
        } else if (const auto* r = s.as<Return>()) {
            out += r->value ? "return " + expr(*r->value) + ";" : std::string("return;");
            nl();
        } else if (const auto* c = s.as<CtorCall>()) {
            out += c->is_super ? "super(" : "this(";
            for (std::size_t i = 0; i < c->args.size(); ++i) {
                if (i) out += ", ";
                out += expr(c->args[i]);
            }
            out += ");";
            nl();
        } else if (const auto* b = s.as<Block>()) {
            body(*b, level);
            nl();
        } else if (const auto* w = s.as<While>()) {
            out += "while (" + expr(w->cond) + ")";
            if (branch(*w->body, level)) nl();
        } else if (const auto* i = s.as<If>()) {
            out += "if (" + expr(i->cond) + ")";
            bool closed = branch(*i->then_branch, level);
            if (!i->else_branch) {
                if (closed) nl();
                return;
            }
            if (closed) {
                out += " else";
            } else {
                indent(level);
                out += "else";
            }
            if (i->else_branch->as<If>()) {
                out += ' ';
                stmt_inline(*i->else_branch, level);
            } else if (branch(*i->else_branch, level)) {
                nl();
            }
        }
    }
};

}  // namespace

std::string emit_expr(const Expr& e) {
    ExprPrinter p;
    p.expr(e);
    return std::move(p.out);
}

std::string emit_class(const std::optional<std::string>& package, const ClassDecl& cls,
                       std::span<const std::string> provenance, const EmitOptions& options) {
    options.validate();
    Writer w(options);
    w.unit(package, cls, provenance, true);
    return std::move(w.out);
}

std::string emit(const CompilationUnit& unit, const EmitOptions& options) {
    return emit_class(unit.package, unit.cls, {}, options);
}

std::string emit(const FlattenedClass& cls, const EmitOptions& options) {
    options.validate();
    ClassDecl decl = cls.to_class_decl();
    std::vector<std::string> provenance;
    provenance.reserve(cls.members.size());
    for (const FlatMember& m : cls.members) provenance.push_back(m.pulled ? m.origin_owner : std::string());
    Writer w(options);
    w.unit(cls.package, decl, provenance, false);
    return std::move(w.out);
}

}  // namespace flatjava
