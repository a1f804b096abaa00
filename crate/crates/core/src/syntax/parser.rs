use super::ast::{vocab, *};
use super::lexer::{tokenize, Token, TokenKind, FRAME_KEYWORDS};
use super::{PrefixEnv, SyntaxError};

const QUALIFIED_CARDINALITY: &str = "qualified cardinality restrictions are outside the supported \
     fragment (unqualified number restrictions only, e.g. `r min 2`)";

/// Parses a complete `.omn` document.
pub fn parse_ontology(text: &str) -> Result<Ontology, SyntaxError> {
    let mut p = Parser::new(text, PrefixEnv::default())?;
    p.ontology()
}

/// Parses a single class expression, resolving prefixed names through `env`.
pub fn parse_concept(text: &str, env: &PrefixEnv) -> Result<ConceptExpr, SyntaxError> {
    let mut p = Parser::new(text, env.clone())?;
    let c = p.description()?;
    p.expect_end()?;
    Ok(c)
}

/// Parses a standalone class axiom of the form `C SubClassOf D`,
/// `C EquivalentTo D` or `C DisjointWith D`.
pub fn parse_class_axiom(text: &str, env: &PrefixEnv) -> Result<Axiom, SyntaxError> {
    let mut p = Parser::new(text, env.clone())?;
    let lhs = p.description()?;
    let tok = p.peek_cloned();
    let word = match &tok {
        Some(t) if matches!(t.kind, TokenKind::SimpleName | TokenKind::Keyword) => {
            t.text.trim_end_matches(':').to_string()
        }
        _ => String::new(),
    };
    let expected = ["SubClassOf", "EquivalentTo", "DisjointWith"];
    if !expected.contains(&word.as_str()) {
        return Err(p.error_here("expected an axiom keyword", &expected));
    }
    p.pos += 1;
    let rhs = p.description()?;
    p.expect_end()?;
    Ok(match word.as_str() {
        "SubClassOf" => Axiom::SubClassOf(lhs, rhs),
        "EquivalentTo" => Axiom::EquivalentClasses(vec![lhs, rhs]),
        _ => Axiom::DisjointClasses(vec![lhs, rhs]),
    })
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    env: PrefixEnv,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, env: PrefixEnv) -> Result<Self, SyntaxError> {
        let tokens = tokenize(src)?
            .into_iter()
            .filter(|t| t.kind != TokenKind::Comment)
            .collect();
        Ok(Parser { src, tokens, pos: 0, env })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_cloned(&self) -> Option<Token> {
        self.peek().cloned()
    }

    fn peek_at(&self, n: usize) -> Option<&Token> {
        self.tokens.get(self.pos + n)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// Location of the current token, or of the last character at end of input.
    fn here(&self) -> (u32, u32) {
        if let Some(t) = self.peek() {
            return (t.line, t.column);
        }
        let mut line = 1;
        let mut column = 1;
        let mut last = (1, 1);
        for c in self.src.chars() {
            last = (line, column);
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        last
    }

    fn error_here(&self, message: impl Into<String>, expected: &[&str]) -> SyntaxError {
        let (line, column) = self.here();
        let found = match self.peek() {
            Some(t) => format!(", found `{}`", t.text),
            None => ", found end of input".to_string(),
        };
        SyntaxError::Parse {
            message: format!("{}{found}", message.into()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            line,
            column,
        }
    }

    fn error_at(&self, tok: &Token, message: impl Into<String>) -> SyntaxError {
        SyntaxError::Parse {
            message: message.into(),
            expected: Vec::new(),
            line: tok.line,
            column: tok.column,
        }
    }

    fn expect_end(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error_here("unexpected trailing input", &["end of input"])),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        self.peek().is_some_and(|t| t.is_keyword(kw))
    }

    fn at_punct(&self, p: &str) -> bool {
        self.peek().is_some_and(|t| t.is_punct(p))
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.at_keyword(kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.at_punct(p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), SyntaxError> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{p}`"), &[p]))
        }
    }

    fn at_frame_keyword(&self) -> bool {
        self.peek().is_some_and(|t| {
            t.kind == TokenKind::Keyword
                && t.text.ends_with(':')
                && FRAME_KEYWORDS.contains(&t.text.trim_end_matches(':'))
        })
    }

    fn at_name(&self) -> bool {
        self.peek().is_some_and(|t| {
            matches!(
                t.kind,
                TokenKind::SimpleName
                    | TokenKind::QuotedName
                    | TokenKind::PrefixedName
                    | TokenKind::FullIri
            ) && !(t.kind == TokenKind::PrefixedName && t.text.ends_with(':'))
        })
    }

    /// Resolves a name token to its full form.
    fn resolve(&self, tok: &Token) -> Result<String, SyntaxError> {
        match tok.kind {
            TokenKind::SimpleName | TokenKind::QuotedName | TokenKind::FullIri => {
                Ok(tok.text.clone())
            }
            TokenKind::PrefixedName => {
                let (prefix, _) = tok.text.split_once(':').unwrap_or(("", ""));
                self.env
                    .expand(&tok.text)
                    .ok_or_else(|| self.error_at(tok, format!("undeclared prefix `{prefix}:`")))
            }
            _ => Err(self.error_at(tok, format!("expected a name, found `{}`", tok.text))),
        }
    }

    fn name(&mut self) -> Result<String, SyntaxError> {
        if !self.at_name() {
            return Err(self.error_here(
                "expected a name",
                &["simple name", "quoted name", "prefixed name", "IRI"],
            ));
        }
        let tok = self.next().unwrap();
        self.resolve(&tok)
    }

    fn iri(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::FullIri => Ok(self.next().unwrap().text),
            Some(t) if t.kind == TokenKind::PrefixedName && !t.text.ends_with(':') => {
                let tok = self.next().unwrap();
                self.resolve(&tok)
            }
            _ => Err(self.error_here("expected an IRI", &["<IRI>", "prefixed name"])),
        }
    }

    // ---------------------------------------------------------------
    // Class expressions
    // ---------------------------------------------------------------

    fn description(&mut self) -> Result<ConceptExpr, SyntaxError> {
        let mut parts = vec![self.conjunction()?];
        while self.eat_keyword("or") {
            parts.push(self.conjunction()?);
        }
        Ok(ConceptExpr::or(parts))
    }

    fn conjunction(&mut self) -> Result<ConceptExpr, SyntaxError> {
        let mut parts = vec![self.primary()?];
        while self.eat_keyword("and") || self.eat_keyword("that") {
            parts.push(self.primary()?);
        }
        Ok(ConceptExpr::and(parts))
    }

    fn primary(&mut self) -> Result<ConceptExpr, SyntaxError> {
        if self.eat_keyword("not") {
            return Ok(ConceptExpr::not(self.primary()?));
        }
        if self.at_keyword("min") || self.at_keyword("max") || self.at_keyword("exactly") {
            return self.prefix_cardinality();
        }
        if self.at_keyword("inverse") {
            let role = self.role()?;
            return self.restriction(role);
        }
        if self.eat_punct("(") {
            let c = self.description()?;
            self.expect_punct(")")?;
            return Ok(c);
        }
        if self.at_punct("{") {
            return self.one_of();
        }
        if self.at_name() {
            let is_restriction = self.peek_at(1).is_some_and(|t| {
                ["some", "only", "value", "min", "max", "exactly"]
                    .iter()
                    .any(|kw| t.is_keyword(kw))
            });
            if is_restriction {
                let role = self.role()?;
                return self.restriction(role);
            }
            let tok = self.next().unwrap();
            let name = self.resolve(&tok)?;
            return self.atomic(&tok, name);
        }
        Err(self.error_here(
            "expected a class expression",
            &["class name", "not", "(", "{", "restriction"],
        ))
    }

    fn atomic(&self, tok: &Token, name: String) -> Result<ConceptExpr, SyntaxError> {
        if name == vocab::OWL_THING {
            Ok(ConceptExpr::Top)
        } else if name == vocab::OWL_NOTHING {
            Ok(ConceptExpr::Bottom)
        } else if name.starts_with(vocab::XSD) || name == vocab::RDFS_LITERAL {
            Err(self.error_at(
                tok,
                format!(
                    "datatype `{}` cannot be used inside a class expression \
                     (datatype reasoning is not supported)",
                    tok.text
                ),
            ))
        } else {
            Ok(ConceptExpr::Named(name))
        }
    }

    fn role(&mut self) -> Result<RoleExpr, SyntaxError> {
        if self.eat_keyword("inverse") {
            let inner = if self.eat_punct("(") {
                let r = self.role()?;
                self.expect_punct(")")?;
                r
            } else {
                self.role()?
            };
            return Ok(inner.inverse());
        }
        Ok(RoleExpr::named(self.name()?))
    }

    fn restriction(&mut self, role: RoleExpr) -> Result<ConceptExpr, SyntaxError> {
        let tok = self.next().ok_or_else(|| {
            self.error_here(
                "expected a restriction keyword",
                &["some", "only", "value", "min", "max", "exactly"],
            )
        })?;
        if tok.kind != TokenKind::Keyword {
            return Err(self.error_at(&tok, format!("expected a restriction keyword, found `{}`", tok.text)));
        }
        match tok.text.as_str() {
            "some" => Ok(ConceptExpr::some(role, self.primary()?)),
            "only" => Ok(ConceptExpr::only(role, self.primary()?)),
            "value" => match self.peek() {
                Some(t) if matches!(t.kind, TokenKind::StringLiteral | TokenKind::Integer) => {
                    let t = t.clone();
                    Err(self.error_at(
                        &t,
                        "literal values cannot be used inside a class expression \
                         (datatype reasoning is not supported)",
                    ))
                }
                _ => Ok(ConceptExpr::HasValue(role, self.name()?)),
            },
            kw @ ("min" | "max" | "exactly") => {
                let n = self.integer()?;
                if self.starts_primary() {
                    let t = self.peek_cloned().unwrap();
                    return Err(self.error_at(&t, QUALIFIED_CARDINALITY));
                }
                Ok(cardinality(kw, n, role))
            }
            other => Err(self.error_at(&tok, format!("expected a restriction keyword, found `{other}`"))),
        }
    }

    /// `min 2 r` form.
    fn prefix_cardinality(&mut self) -> Result<ConceptExpr, SyntaxError> {
        let kw = self.next().unwrap().text;
        let n = self.integer()?;
        let role = self.role()?;
        if self.starts_primary() {
            let t = self.peek_cloned().unwrap();
            return Err(self.error_at(&t, QUALIFIED_CARDINALITY));
        }
        Ok(cardinality(&kw, n, role))
    }

    fn starts_primary(&self) -> bool {
        self.at_name() || self.at_punct("(") || self.at_punct("{") || self.at_keyword("not")
    }

    fn integer(&mut self) -> Result<u32, SyntaxError> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Integer => {
                let t = self.next().unwrap();
                t.text
                    .parse()
                    .map_err(|_| self.error_at(&t, "cardinality out of range"))
            }
            _ => Err(self.error_here("expected a non-negative integer", &["integer"])),
        }
    }

    fn one_of(&mut self) -> Result<ConceptExpr, SyntaxError> {
        self.expect_punct("{")?;
        let mut inds = vec![self.name()?];
        while self.eat_punct(",") {
            inds.push(self.name()?);
        }
        self.expect_punct("}")?;
        Ok(ConceptExpr::OneOf(inds))
    }

    // ---------------------------------------------------------------
    // Documents
    // ---------------------------------------------------------------

    fn ontology(&mut self) -> Result<Ontology, SyntaxError> {
        let mut ont = Ontology::default();
        while self.at_keyword("Prefix:") {
            self.prefix_decl(&mut ont)?;
        }
        if self.at_keyword("Ontology:") {
            let line = self.next().unwrap().line;
            if self.peek().is_some_and(|t| t.kind == TokenKind::FullIri || (t.kind == TokenKind::PrefixedName && !t.text.ends_with(':'))) {
                ont.iri = Some(self.iri()?);
                if self.peek().is_some_and(|t| t.kind == TokenKind::FullIri) {
                    ont.version_iri = Some(self.iri()?);
                }
            }
            let _ = line;
            loop {
                if self.at_keyword("Import:") {
                    self.import(&mut ont)?;
                } else if self.at_keyword("Annotations:") {
                    self.next();
                    let anns = self.annotation_list()?;
                    ont.annotations.extend(anns.into_iter().map(|(a, _)| a));
                } else {
                    break;
                }
            }
        }
        while let Some(tok) = self.peek_cloned() {
            if tok.kind != TokenKind::Keyword {
                return Err(self.error_here("expected a frame", &frame_starts()));
            }
            match tok.text.as_str() {
                "Prefix:" => self.prefix_decl(&mut ont)?,
                "Import:" => self.import(&mut ont)?,
                "Class:" => self.class_frame(&mut ont)?,
                "ObjectProperty:" => self.object_property_frame(&mut ont)?,
                "AnnotationProperty:" => self.annotation_property_frame(&mut ont)?,
                "Individual:" => self.individual_frame(&mut ont)?,
                "DataProperty:" => self.opaque_frame(&mut ont, EntityKind::DataProperty)?,
                "Datatype:" => self.opaque_frame(&mut ont, EntityKind::Datatype)?,
                "DisjointClasses:" | "EquivalentClasses:" => {
                    self.next();
                    let line = tok.line;
                    let mut cs = vec![self.description()?];
                    while self.eat_punct(",") {
                        cs.push(self.description()?);
                    }
                    if cs.len() < 2 {
                        return Err(self.error_at(&tok, "at least two class expressions are required"));
                    }
                    let axiom = if tok.text == "DisjointClasses:" {
                        Axiom::DisjointClasses(cs)
                    } else {
                        Axiom::EquivalentClasses(cs)
                    };
                    ont.axioms.push(SourcedAxiom { axiom, line });
                }
                "EquivalentProperties:" => {
                    self.next();
                    let mut rs = vec![self.role()?];
                    while self.eat_punct(",") {
                        rs.push(self.role()?);
                    }
                    if rs.len() < 2 {
                        return Err(self.error_at(&tok, "at least two properties are required"));
                    }
                    ont.axioms.push(SourcedAxiom { axiom: Axiom::EquivalentProperties(rs), line: tok.line });
                }
                other => {
                    return Err(self.error_at(
                        &tok,
                        format!("`{other}` frames are not supported"),
                    ))
                }
            }
        }
        Ok(ont)
    }

    fn prefix_decl(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        self.next();
        let tok = match self.peek() {
            Some(t) if t.kind == TokenKind::PrefixedName && t.text.ends_with(':') => {
                self.next().unwrap()
            }
            _ => return Err(self.error_here("expected a prefix name", &["prefix:"])),
        };
        let prefix = tok.text.trim_end_matches(':').to_string();
        let iri = match self.peek() {
            Some(t) if t.kind == TokenKind::FullIri => self.next().unwrap().text,
            _ => return Err(self.error_here("expected a namespace IRI", &["<IRI>"])),
        };
        self.env.insert(prefix.clone(), iri.clone());
        ont.prefixes.push((prefix, iri));
        Ok(())
    }

    fn import(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        let line = self.next().unwrap().line;
        let iri = self.iri()?;
        ont.axioms.push(SourcedAxiom { axiom: Axiom::Import(iri), line });
        Ok(())
    }

    /// Reads the frame header `Kind: name` and emits its declaration.
    fn frame_header(&mut self, ont: &mut Ontology, kind: EntityKind) -> Result<String, SyntaxError> {
        let line = self.next().unwrap().line;
        let name = self.name()?;
        ont.axioms.push(SourcedAxiom { axiom: Axiom::Declaration(kind, name.clone()), line });
        Ok(name)
    }

    /// Parses `item (, item)*`, recording the line each item starts on.
    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, SyntaxError>,
    ) -> Result<Vec<(T, u32)>, SyntaxError> {
        let mut out = Vec::new();
        loop {
            if self.at_keyword("Annotations:") {
                return Err(self.error_here("axiom annotations are not supported", &[]));
            }
            let line = self.here().0;
            out.push((item(self)?, line));
            if !self.eat_punct(",") {
                break;
            }
        }
        Ok(out)
    }

    fn section(&mut self) -> Option<Token> {
        if self.at_frame_keyword() {
            let t = self.peek_cloned().unwrap();
            let top_level = matches!(
                t.text.as_str(),
                "Prefix:"
                    | "Import:"
                    | "Class:"
                    | "ObjectProperty:"
                    | "AnnotationProperty:"
                    | "Individual:"
                    | "DataProperty:"
                    | "Datatype:"
                    | "DisjointClasses:"
                    | "EquivalentClasses:"
                    | "EquivalentProperties:"
                    | "DisjointProperties:"
                    | "SameIndividual:"
                    | "DifferentIndividuals:"
            );
            if !top_level {
                self.pos += 1;
                return Some(t);
            }
        }
        None
    }

    fn at_frame_end(&self) -> bool {
        self.peek().is_none() || self.at_frame_keyword()
    }

    fn class_frame(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        let name = self.frame_header(ont, EntityKind::Class)?;
        let subject = ConceptExpr::Named(name.clone());
        while let Some(sec) = self.section() {
            match sec.text.as_str() {
                "SubClassOf:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::SubClassOf(subject.clone(), c), line);
                    }
                }
                "EquivalentTo:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::EquivalentClasses(vec![subject.clone(), c]), line);
                    }
                }
                "DisjointWith:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::DisjointClasses(vec![subject.clone(), c]), line);
                    }
                }
                "Annotations:" => {
                    for (a, line) in self.annotation_list()? {
                        push(ont, Axiom::AnnotationAssertion(name.clone(), a), line);
                    }
                }
                other => {
                    return Err(self.error_at(&sec, format!("`{other}` is not supported in a Class frame")))
                }
            }
        }
        self.frame_done("Class")
    }

    fn frame_done(&self, frame: &str) -> Result<(), SyntaxError> {
        if self.at_frame_end() {
            Ok(())
        } else {
            Err(self.error_here(format!("unexpected token in {frame} frame"), &["section keyword", "frame keyword"]))
        }
    }

    fn object_property_frame(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        let name = self.frame_header(ont, EntityKind::ObjectProperty)?;
        let me = RoleExpr::named(name.clone());
        while let Some(sec) = self.section() {
            match sec.text.as_str() {
                "SubPropertyOf:" => {
                    for (r, line) in self.list(Self::role)? {
                        push(ont, Axiom::SubPropertyOf(me.clone(), r), line);
                    }
                }
                "EquivalentTo:" => {
                    for (r, line) in self.list(Self::role)? {
                        push(ont, Axiom::EquivalentProperties(vec![me.clone(), r]), line);
                    }
                }
                "InverseOf:" => {
                    for (r, line) in self.list(Self::role)? {
                        let axiom = if r.inverted {
                            Axiom::EquivalentProperties(vec![me.clone(), RoleExpr::named(r.name)])
                        } else {
                            Axiom::InverseProperties(name.clone(), r.name)
                        };
                        push(ont, axiom, line);
                    }
                }
                "Characteristics:" => {
                    let chars = self.list(|p| {
                        let tok = p.peek_cloned();
                        match tok {
                            Some(t) if t.kind == TokenKind::SimpleName => {
                                p.pos += 1;
                                Ok(t)
                            }
                            _ => Err(p.error_here("expected a property characteristic", &["Transitive", "Functional", "InverseFunctional", "Symmetric"])),
                        }
                    })?;
                    for (tok, line) in chars {
                        let axiom = match tok.text.as_str() {
                            "Transitive" => Axiom::TransitiveProperty(name.clone()),
                            "Functional" => Axiom::SubClassOf(ConceptExpr::Top, ConceptExpr::Max(1, me.clone())),
                            "InverseFunctional" => {
                                Axiom::SubClassOf(ConceptExpr::Top, ConceptExpr::Max(1, me.inverse()))
                            }
                            "Symmetric" => Axiom::EquivalentProperties(vec![me.clone(), me.inverse()]),
                            other => {
                                return Err(self.error_at(
                                    &tok,
                                    format!("property characteristic `{other}` is outside the supported fragment"),
                                ))
                            }
                        };
                        push(ont, axiom, line);
                    }
                }
                "Domain:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::Domain(name.clone(), c), line);
                    }
                }
                "Range:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::Range(name.clone(), c), line);
                    }
                }
                "Annotations:" => {
                    for (a, line) in self.annotation_list()? {
                        push(ont, Axiom::AnnotationAssertion(name.clone(), a), line);
                    }
                }
                other => {
                    return Err(self.error_at(
                        &sec,
                        format!("`{other}` is not supported in an ObjectProperty frame"),
                    ))
                }
            }
        }
        self.frame_done("ObjectProperty")
    }

    fn annotation_property_frame(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        let name = self.frame_header(ont, EntityKind::AnnotationProperty)?;
        while let Some(sec) = self.section() {
            if sec.text == "Annotations:" {
                for (a, line) in self.annotation_list()? {
                    push(ont, Axiom::AnnotationAssertion(name.clone(), a), line);
                }
            } else {
                let text = self.raw_section();
                push(
                    ont,
                    Axiom::Opaque { subject: name.clone(), clause: sec.text.trim_end_matches(':').to_string(), text },
                    sec.line,
                );
            }
        }
        self.frame_done("AnnotationProperty")
    }

    fn individual_frame(&mut self, ont: &mut Ontology) -> Result<(), SyntaxError> {
        let name = self.frame_header(ont, EntityKind::NamedIndividual)?;
        while let Some(sec) = self.section() {
            match sec.text.as_str() {
                "Types:" => {
                    for (c, line) in self.list(Self::description)? {
                        push(ont, Axiom::ClassAssertion(name.clone(), c), line);
                    }
                }
                "Facts:" => {
                    let facts = self.list(|p| {
                        if p.at_keyword("not") {
                            return Err(p.error_here("negative property assertions are not supported", &[]));
                        }
                        let role = p.role()?;
                        match p.peek() {
                            Some(t) if matches!(t.kind, TokenKind::StringLiteral | TokenKind::Integer) => {
                                let lit = p.literal()?;
                                Ok(Err((role, lit)))
                            }
                            _ => Ok(Ok((role, p.name()?))),
                        }
                    })?;
                    for (fact, line) in facts {
                        match fact {
                            Ok((role, target)) => {
                                push(ont, Axiom::PropertyAssertion(name.clone(), role, target), line)
                            }
                            Err((role, lit)) => push(
                                ont,
                                Axiom::Opaque {
                                    subject: name.clone(),
                                    clause: "Facts".into(),
                                    text: format!("{} {:?}", role.name, lit.value),
                                },
                                line,
                            ),
                        }
                    }
                }
                "Annotations:" => {
                    for (a, line) in self.annotation_list()? {
                        push(ont, Axiom::AnnotationAssertion(name.clone(), a), line);
                    }
                }
                other => {
                    return Err(self.error_at(&sec, format!("`{other}` is not supported in an Individual frame")))
                }
            }
        }
        self.frame_done("Individual")
    }

    fn opaque_frame(&mut self, ont: &mut Ontology, kind: EntityKind) -> Result<(), SyntaxError> {
        let name = self.frame_header(ont, kind)?;
        while let Some(sec) = self.section() {
            if sec.text == "Annotations:" {
                for (a, line) in self.annotation_list()? {
                    push(ont, Axiom::AnnotationAssertion(name.clone(), a), line);
                }
            } else {
                let text = self.raw_section();
                push(
                    ont,
                    Axiom::Opaque { subject: name.clone(), clause: sec.text.trim_end_matches(':').to_string(), text },
                    sec.line,
                );
            }
        }
        self.frame_done(&kind.to_string())
    }

    /// Consumes tokens up to the next section or frame keyword and returns
    /// the source text they cover.
    fn raw_section(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some() && !self.at_frame_keyword() {
            self.pos += 1;
        }
        if start == self.pos {
            return String::new();
        }
        let from = self.tokens[start].span.start;
        let to = self.tokens[self.pos - 1].span.end;
        self.src[from..to].split_whitespace().collect::<Vec<_>>().join(" ")
    }

    fn annotation_list(&mut self) -> Result<Vec<(Annotation, u32)>, SyntaxError> {
        self.list(|p| {
            let property = p.name()?;
            let value = match p.peek() {
                Some(t) if matches!(t.kind, TokenKind::StringLiteral | TokenKind::Integer) => {
                    AnnotationValue::Literal(p.literal()?)
                }
                _ => AnnotationValue::Iri(p.name()?),
            };
            Ok(Annotation { property, value })
        })
    }

    fn literal(&mut self) -> Result<Literal, SyntaxError> {
        let tok = self.next().unwrap();
        if tok.kind == TokenKind::Integer {
            return Ok(Literal {
                value: tok.text,
                lang: None,
                datatype: Some(format!("{}integer", vocab::XSD)),
            });
        }
        let mut lit = Literal::plain(tok.text);
        if self.eat_punct("@") {
            match self.peek() {
                Some(t) if t.kind == TokenKind::SimpleName => lit.lang = Some(self.next().unwrap().text),
                _ => return Err(self.error_here("expected a language tag", &["language tag"])),
            }
        } else if self.eat_punct("^^") {
            lit.datatype = Some(self.name()?);
        }
        Ok(lit)
    }
}

fn cardinality(kw: &str, n: u32, role: RoleExpr) -> ConceptExpr {
    match kw {
        "min" => ConceptExpr::Min(n, role),
        "max" => ConceptExpr::Max(n, role),
        _ => ConceptExpr::Exact(n, role),
    }
}

fn push(ont: &mut Ontology, axiom: Axiom, line: u32) {
    ont.axioms.push(SourcedAxiom { axiom, line });
}

fn frame_starts() -> [&'static str; 8] {
    [
        "Prefix:",
        "Ontology:",
        "Import:",
        "Class:",
        "ObjectProperty:",
        "AnnotationProperty:",
        "Individual:",
        "DisjointClasses:",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> ConceptExpr {
        parse_concept(s, &PrefixEnv::default()).unwrap()
    }

    fn n(s: &str) -> ConceptExpr {
        ConceptExpr::named(s)
    }

    fn r(s: &str) -> RoleExpr {
        RoleExpr::named(s)
    }

    #[test]
    fn listing_one_clause_shape() {
        assert_eq!(
            c("Paradigm and ('is about' some Correct-by-Construction)"),
            ConceptExpr::And(vec![
                n("Paradigm"),
                ConceptExpr::some(r("is about"), n("Correct-by-Construction")),
            ])
        );
    }

    #[test]
    fn not_nothing() {
        assert_eq!(c("not owl:Nothing"), ConceptExpr::not(ConceptExpr::Bottom));
        assert_eq!(c("owl:Thing"), ConceptExpr::Top);
    }

    #[test]
    fn precedence() {
        assert_eq!(
            c("A and B or C"),
            ConceptExpr::Or(vec![ConceptExpr::And(vec![n("A"), n("B")]), n("C")])
        );
        assert_eq!(
            c("not A and r some B or C"),
            ConceptExpr::Or(vec![
                ConceptExpr::And(vec![
                    ConceptExpr::not(n("A")),
                    ConceptExpr::some(r("r"), n("B"))
                ]),
                n("C")
            ])
        );
        assert_eq!(c("r some not A"), ConceptExpr::some(r("r"), ConceptExpr::not(n("A"))));
        assert_eq!(c("not r some A"), ConceptExpr::not(ConceptExpr::some(r("r"), n("A"))));
    }

    #[test]
    fn cardinalities_and_inverse() {
        assert_eq!(c("min 2 'has member part'"), ConceptExpr::Min(2, r("has member part")));
        assert_eq!(c("r max 1"), ConceptExpr::Max(1, r("r")));
        assert_eq!(c("exactly 3 inverse r"), ConceptExpr::Exact(3, RoleExpr::inverse_of("r")));
        assert_eq!(
            c("inverse (inverse r) some A"),
            ConceptExpr::some(r("r"), n("A"))
        );
    }

    #[test]
    fn qualified_cardinality_is_rejected() {
        for src in ["min 2 r C", "r min 2 C", "r exactly 1 (A and B)"] {
            let err = parse_concept(src, &PrefixEnv::default()).unwrap_err();
            assert!(err.to_string().contains("qualified cardinality"), "{err}");
        }
    }

    #[test]
    fn datatypes_are_rejected_in_class_expressions() {
        let err = parse_concept("hasAge some xsd:integer", &PrefixEnv::default()).unwrap_err();
        assert!(err.to_string().contains("datatype"));
        let err = parse_concept("hasName value \"x\"", &PrefixEnv::default()).unwrap_err();
        assert!(err.to_string().contains("literal"));
    }

    #[test]
    fn nominals_parse() {
        assert_eq!(c("{a, b}"), ConceptExpr::OneOf(vec!["a".into(), "b".into()]));
        assert_eq!(c("r value a"), ConceptExpr::HasValue(r("r"), "a".into()));
    }

    #[test]
    fn errors_carry_expected_sets() {
        let err = parse_concept("A and", &PrefixEnv::default()).unwrap_err();
        match err {
            SyntaxError::Parse { expected, line, column, .. } => {
                assert!(!expected.is_empty());
                assert_eq!((line, column), (1, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_concept("A B", &PrefixEnv::default()).is_err());
        assert!(parse_concept("", &PrefixEnv::default()).is_err());
        assert!(parse_concept("foo:Bar", &PrefixEnv::default()).is_err());
    }

    #[test]
    fn empty_ontology() {
        let ont = parse_ontology("Ontology: <http://example.org/empty>").unwrap();
        assert_eq!(ont.iri.as_deref(), Some("http://example.org/empty"));
        assert!(ont.axioms.is_empty());
    }

    #[test]
    fn class_frame_lowering() {
        let src = "Prefix: ex: <http://example.org/>\n\
                   Ontology: <http://example.org/o>\n\
                   Import: <http://example.org/base>\n\
                   Class: ex:A\n\
                   \x20 SubClassOf: B, r some C\n\
                   \x20 EquivalentTo: B and D\n\
                   \x20 DisjointWith: E\n\
                   \x20 Annotations: skos:definition \"An A.\"@en, dc:source \"ISO 9000\"\n";
        let ont = parse_ontology(src).unwrap();
        let a = n("http://example.org/A");
        let axioms: Vec<_> = ont.axioms().cloned().collect();
        assert_eq!(axioms[0], Axiom::Import("http://example.org/base".into()));
        assert_eq!(axioms[1], Axiom::Declaration(EntityKind::Class, "http://example.org/A".into()));
        assert_eq!(axioms[2], Axiom::SubClassOf(a.clone(), n("B")));
        assert_eq!(axioms[3], Axiom::SubClassOf(a.clone(), ConceptExpr::some(r("r"), n("C"))));
        assert_eq!(axioms[4], Axiom::EquivalentClasses(vec![a.clone(), ConceptExpr::And(vec![n("B"), n("D")])]));
        assert_eq!(axioms[5], Axiom::DisjointClasses(vec![a.clone(), n("E")]));
        match &axioms[6] {
            Axiom::AnnotationAssertion(s, ann) => {
                assert_eq!(s, "http://example.org/A");
                assert_eq!(ann.property, vocab::SKOS_DEFINITION);
                assert_eq!(ann.value, AnnotationValue::Literal(Literal { value: "An A.".into(), lang: Some("en".into()), datatype: None }));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(ont.axioms[2].line, 5);
        assert_eq!(ont.axioms[6].line, 8);
    }

    #[test]
    fn property_and_individual_frames() {
        let src = "ObjectProperty: p\n\
                   \x20 SubPropertyOf: q\n\
                   \x20 InverseOf: pinv\n\
                   \x20 Characteristics: Transitive, Functional\n\
                   \x20 Domain: A\n\
                   \x20 Range: B\n\
                   Individual: a\n\
                   \x20 Types: A\n\
                   \x20 Facts: p b\n";
        let axioms: Vec<_> = parse_ontology(src).unwrap().axioms().cloned().collect();
        assert_eq!(
            axioms,
            vec![
                Axiom::Declaration(EntityKind::ObjectProperty, "p".into()),
                Axiom::SubPropertyOf(r("p"), r("q")),
                Axiom::InverseProperties("p".into(), "pinv".into()),
                Axiom::TransitiveProperty("p".into()),
                Axiom::SubClassOf(ConceptExpr::Top, ConceptExpr::Max(1, r("p"))),
                Axiom::Domain("p".into(), n("A")),
                Axiom::Range("p".into(), n("B")),
                Axiom::Declaration(EntityKind::NamedIndividual, "a".into()),
                Axiom::ClassAssertion("a".into(), n("A")),
                Axiom::PropertyAssertion("a".into(), r("p"), "b".into()),
            ]
        );
    }

    #[test]
    fn unsupported_characteristic() {
        let err = parse_ontology("ObjectProperty: p Characteristics: Reflexive").unwrap_err();
        assert!(err.to_string().contains("Reflexive"));
    }

    #[test]
    fn class_axiom_form() {
        let env = PrefixEnv::default();
        assert_eq!(
            parse_class_axiom("'Seamless Interface' SubClassOf Interface", &env).unwrap(),
            Axiom::SubClassOf(n("Seamless Interface"), n("Interface"))
        );
        assert!(parse_class_axiom("A", &env).is_err());
    }
}
