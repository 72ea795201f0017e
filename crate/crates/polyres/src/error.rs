use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("polynomial is identically zero mod {q}; every residue is a root")]
    IdenticallyZeroMod { q: u64 },
    #[error("root scan over Z_{q} exceeds the configured cap of {cap}")]
    ScanCapExceeded { q: u64, cap: u64 },
    #[error("minor size {k} exceeds the {rows}x{cols} matrix dimensions")]
    MinorTooLarge { k: usize, rows: usize, cols: usize },
    #[error("{count} minors of size {k} exceed the enumeration cap of {cap}")]
    MinorCapExceeded { k: usize, count: u128, cap: u128 },
    #[error("sequence index {n} exceeds the exact-computation cap of {cap}")]
    SequenceCapExceeded { n: u64, cap: u64 },
    #[error("prime {q} exceeds the practical cap of {cap} for this computation")]
    PrimeTooLarge { q: u64, cap: u64 },
    #[error("constant term is divisible by {q}")]
    ConstantTermDivisible { q: u64 },
    #[error("prime {q} is not congruent to +/-1 mod {modulus}")]
    WrongResidueClass { q: u64, modulus: u64 },
    #[error("remainder matrix has a denominator divisible by {q}; rank analysis needs the leading coefficient coprime to the prime")]
    MatrixNotReducible { q: u64 },
}
