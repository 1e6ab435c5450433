//! Binds every chapter of the guide in `book/` as a doctest, so the code
//! blocks in the book compile and pass alongside the test suite.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/depressing-the-quintic.md")]
pub struct DepressingTheQuintic;

#[doc = include_str!("../../../book/src/the-cosine-substitution.md")]
pub struct TheCosineSubstitution;

#[doc = include_str!("../../../book/src/critical-points.md")]
pub struct CriticalPoints;

#[doc = include_str!("../../../book/src/counting-roots.md")]
pub struct CountingRoots;

#[doc = include_str!("../../../book/src/the-sturm-oracle.md")]
pub struct TheSturmOracle;

#[doc = include_str!("../../../book/src/the-quartic-analogue.md")]
pub struct TheQuarticAnalogue;

#[doc = include_str!("../../../book/src/command-line.md")]
pub struct CommandLine;
