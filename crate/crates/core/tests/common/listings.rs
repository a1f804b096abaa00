//! The nine published class definitions, each wrapped in a class frame that
//! asserts its captioned superclass.

pub const LISTINGS: [(&str, &str); 9] = [
    (
        "Seamless Digital Engineering Paradigm",
        "Class: 'Seamless Digital Engineering Paradigm'
    SubClassOf: Paradigm
    EquivalentTo:
        Paradigm
    and ('has continuant part' some 'Digital Engineering Approach')
    and ('is about' some Correct-by-Construction)
    and (prescribes some 'Seamless Digital Engineering Environment')
",
    ),
    (
        "Correct-by-Construction",
        "Class: Correct-by-Construction
    SubClassOf: 'Assurance Goal'
    EquivalentTo:
        'Assurance Goal'
    and ('is concretized by' some 'Integration Process')
    and ('is concretized by' some 'Loss of Error')
    and (prescribes some 'High-Integrity Level')
    and (prescribes some 'Process Outcome')
",
    ),
    (
        "Seamless Digital Engineering Environment",
        "Class: 'Seamless Digital Engineering Environment'
    SubClassOf: 'Engineered System'
    EquivalentTo:
        'Digital Engineering Environment'
    and 'Engineered System'
    and ('is carrier of' some ('High-Integrity Level Claim' and 'Seamless Quality Claim'))
    and ('has member part' some 'Trustworthy Computing Base')
",
    ),
    (
        "Seamless Quality Claim",
        "Class: 'Seamless Quality Claim'
    SubClassOf: 'Quality Claim'
    EquivalentTo:
        'Quality Claim'
    and (prescribes some 'Seamless Integration')
    and (prescribes some 'Seamless Interaction Capability')
    and (prescribes some 'Seamless Quality-in-Use')
",
    ),
    (
        "Seamless Integration",
        "Class: 'Seamless Integration'
    SubClassOf: 'Product Capability'
    EquivalentTo:
        'Product Capability'
    and ('has realization' some 'Act of Formal Verification')
    and ('has continuant part' some
            ('Product Analysability'
         and 'Product Faultlessness'
         and 'Product Functional Correctness'
         and 'Product Integrity'
         and 'Product Safe Integration'))
    and ('specifically depends on' some 'Seamless Interface')
",
    ),
    (
        "Seamless Interface",
        "Class: 'Seamless Interface'
    SubClassOf: Interface
    EquivalentTo:
        Interface
    and ('has continuant part' some 'Proof Certificate')
    and ('prescribed by' some 'System Architecture Model')
    and ('is object of' some 'Act of Formal Verification')

Class: Interface
    SubClassOf: 'Information Bearing Artifact'
",
    ),
    (
        "Seamless Interaction Capability",
        "Class: 'Seamless Interaction Capability'
    SubClassOf: 'Product Capability'
    EquivalentTo:
        'Product Interaction Capability'
    and ('has continuant part' some
            ('Product Compatibility'
         and 'Product Functional Appropriateness'
         and 'Product Functional Completeness'))
    and ('specifically depends on' some 'Seamless Integration')
",
    ),
    (
        "Seamless Quality-in-Use",
        "Class: 'Seamless Quality-in-Use'
    SubClassOf: Quality-in-Use
    EquivalentTo:
        Quality-in-Use
    and ('has continuant part' some
            (Experience
         and Suitability
         and Trustworthiness
         and Usability))
    and ('specifically depends on' some
            ('Seamless Integration'
         and 'Seamless Interaction Capability'))
",
    ),
    (
        "Trustworthiness",
        "Class: Trustworthiness
    SubClassOf: Acceptability
    EquivalentTo:
        Acceptability
    and ('specifically depends on' some
            ('Complete Assurance Case Report'
        and ('is carrier of' some 'Trustworthiness Quality Claim')))
",
    ),
];
