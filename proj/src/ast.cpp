#include "flatjava/ast.hpp"

#include <sstream>

namespace flatjava::ast {

std::string_view to_string(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Protected: return "protected";
        case Visibility::Package: return "package";
        case Visibility::Private: return "private";
    }
    return "?";
}

bool is_primitive(std::string_view t) {
    return t == "int" || t == "long" || t == "double" || t == "boolean" || t == "char" ||
           t == "float" || t == "byte" || t == "short";
}

const std::string& Member::name() const {
    return std::visit([](const auto& n) -> const std::string& { return n.name; }, node);
}

const Modifiers& Member::mods() const {
    return std::visit([](const auto& n) -> const Modifiers& { return n.mods; }, node);
}

namespace {

std::string mods_str(const Modifiers& m) {
    std::string s(to_string(m.visibility));
    if (m.is_static) s += " static";
    if (m.is_final) s += " final";
    return s;
}

class Dumper {
public:
    std::ostringstream out;

    void expr(const Expr& e) {
        std::visit([&](const auto& n) { node(n); }, e.node);
    }

    void args(const std::vector<Expr>& as) {
        for (const Expr& a : as) {
            out << ' ';
            expr(a);
        }
    }

    void node(const Literal& n) { out << n.lexeme; }
    void node(const Name& n) { out << "(name " << n.ident << ')'; }
    void node(const ThisExpr&) { out << "this"; }
    void node(const FieldAccess& n) {
        switch (n.receiver_kind) {
            case ReceiverKind::This: out << "(this-field " << n.name << ')'; return;
            case ReceiverKind::Super: out << "(super-field " << n.name << ')'; return;
            default:
                out << "(get ";
                expr(*n.receiver);
                out << ' ' << n.name << ')';
        }
    }
    void node(const Call& n) {
        switch (n.receiver_kind) {
            case ReceiverKind::None: out << "(call " << n.name; break;
            case ReceiverKind::This: out << "(this-call " << n.name; break;
            case ReceiverKind::Super: out << "(super-call " << n.name; break;
            case ReceiverKind::Expr:
                out << "(call-on ";
                expr(*n.receiver);
                out << ' ' << n.name;
                break;
        }
        args(n.args);
        out << ')';
    }
    void node(const New& n) {
        out << "(new " << n.type.str();
        args(n.args);
        out << ')';
    }
    void node(const NewArray& n) {
        out << "(new-array " << n.element.name << ' ';
        expr(*n.size);
        out << ')';
    }
    void node(const Unary& n) {
        out << (n.postfix ? "(post " : "(pre ") << n.op << ' ';
        expr(*n.operand);
        out << ')';
    }
    void node(const Binary& n) {
        out << '(' << n.op << ' ';
        expr(*n.lhs);
        out << ' ';
        expr(*n.rhs);
        out << ')';
    }
    void node(const Assign& n) {
        out << '(' << n.op << ' ';
        expr(*n.target);
        out << ' ';
        expr(*n.value);
        out << ')';
    }
    void node(const Paren& n) {
        out << "(paren ";
        expr(*n.inner);
        out << ')';
    }
    void node(const Index& n) {
        out << "(index ";
        expr(*n.array);
        out << ' ';
        expr(*n.index);
        out << ')';
    }

    void stmt(const Stmt& s) {
        std::visit([&](const auto& n) { snode(n); }, s.node);
    }
    void snode(const LocalVar& n) {
        out << "(local " << n.type.str() << ' ' << n.name;
        if (n.init) {
            out << ' ';
            expr(*n.init);
        }
        out << ')';
    }
    void snode(const ExprStmt& n) {
        out << "(expr ";
        expr(n.expr);
        out << ')';
    }
    void snode(const If& n) {
        out << "(if ";
        expr(n.cond);
        out << ' ';
        stmt(*n.then_branch);
        if (n.else_branch) {
            out << ' ';
            stmt(*n.else_branch);
        }
        out << ')';
    }
    void snode(const While& n) {
        out << "(while ";
        expr(n.cond);
        out << ' ';
        stmt(*n.body);
        out << ')';
    }
    void snode(const Return& n) {
        out << "(return";
        if (n.value) {
            out << ' ';
            expr(*n.value);
        }
        out << ')';
    }
    void snode(const Block& n) {
        out << "(block";
        for (const Stmt& s : n.stmts) {
            out << ' ';
            stmt(s);
        }
        out << ')';
    }
    void snode(const CtorCall& n) {
        out << (n.is_super ? "(super-ctor" : "(this-ctor");
        args(n.args);
        out << ')';
    }

    void params(const std::vector<Param>& ps) {
        out << "(params";
        for (const Param& p : ps) out << " (" << p.type.str() << ' ' << p.name << ')';
        out << ')';
    }

    void member(const Member& m) {
        if (const auto* f = m.as<Field>()) {
            out << "(field " << mods_str(f->mods) << ' ' << f->type.str() << ' ' << f->name;
            if (f->init) {
                out << ' ';
                expr(*f->init);
            }
            out << ')';
        } else if (const auto* md = m.as<Method>()) {
            out << "(method " << mods_str(md->mods) << ' '
                << (md->return_type ? md->return_type->str() : std::string("void")) << ' ' << md->name
                << ' ';
            params(md->params);
            out << ' ';
            snode(md->body);
            out << ')';
        } else if (const auto* c = m.as<Constructor>()) {
            out << "(ctor " << to_string(c->mods.visibility) << ' ' << c->name << ' ';
            params(c->params);
            out << ' ';
            snode(c->body);
            out << ')';
        }
    }
};

}  // namespace

std::string dump(const CompilationUnit& unit) {
    Dumper d;
    d.out << "(unit";
    if (unit.package) d.out << " (package " << *unit.package << ')';
    const ClassDecl& c = unit.cls;
    d.out << " (class " << to_string(c.visibility) << ' ' << c.name;
    if (c.superclass) d.out << " (extends " << *c.superclass << ')';
    for (const Member& m : c.members) {
        d.out << ' ';
        d.member(m);
    }
    d.out << "))";
    return d.out.str();
}

std::string dump(const Expr& expr) {
    Dumper d;
    d.expr(expr);
    return d.out.str();
}

}  // namespace flatjava::ast
