//! Truncated noncommutative power series in letters `x_1..x_n` and
//! optionally `y_1..y_n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coeff;

/// A letter: `0..n` encode `x_1..x_n`, `n..2n` encode `y_1..y_n`.
pub type Letter = u16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("series uses different alphabets ({0} vs {1} letters)")]
    AlphabetMismatch(usize, usize),
    #[error("series has a constant term")]
    ConstantTerm,
    #[error("series uses y-letters where only x-letters are allowed")]
    UsesY,
    #[error("monomial {0} is not admissible")]
    NotAdmissible(String),
    #[error("monomial {0} contains a pattern i,1,i")]
    ViolatesAvoidance(String),
    #[error("monomial {0} uses y1")]
    UsesY1(String),
}

/// Series truncated above `degree_cap`: only monomials of length at most the
/// cap are stored, and products drop anything longer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeSeries<C> {
    n: usize,
    uses_y: bool,
    degree_cap: usize,
    terms: BTreeMap<Vec<Letter>, C>,
}

impl<C: Coeff> FreeSeries<C> {
    pub fn zero(n: usize, uses_y: bool, degree_cap: usize) -> Self {
        FreeSeries {
            n,
            uses_y,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, uses_y: bool, degree_cap: usize) -> Self {
        Self::monomial(n, uses_y, degree_cap, Vec::new(), C::one())
    }

    pub fn monomial(n: usize, uses_y: bool, degree_cap: usize, word: Vec<Letter>, c: C) -> Self {
        let mut s = Self::zero(n, uses_y, degree_cap);
        s.add_term(word, c);
        s
    }

    /// `x_i` (1-based).
    pub fn x(n: usize, uses_y: bool, degree_cap: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n);
        Self::monomial(n, uses_y, degree_cap, vec![(i - 1) as Letter], C::one())
    }

    /// `y_i` (1-based).
    pub fn y(n: usize, degree_cap: usize, i: usize) -> Self {
        assert!(1 <= i && i <= n);
        Self::monomial(n, true, degree_cap, vec![(n + i - 1) as Letter], C::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn uses_y(&self) -> bool {
        self.uses_y
    }
    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }
    pub fn terms(&self) -> &BTreeMap<Vec<Letter>, C> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn coeff(&self, w: &[Letter]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn alphabet_size(&self) -> usize {
        if self.uses_y {
            2 * self.n
        } else {
            self.n
        }
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, cap);
        for (w, c) in &self.terms {
            s.add_term(w.clone(), c.clone());
        }
        s
    }

    /// Adds `c * w`, dropping it if longer than the cap.
    pub fn add_term(&mut self, w: Vec<Letter>, c: C) {
        if w.len() > self.degree_cap || c.is_zero() {
            return;
        }
        debug_assert!(w.iter().all(|&l| (l as usize) < self.alphabet_size()));
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check_compatible(&self, o: &Self) -> Result<(), SeriesError> {
        if self.n != o.n {
            return Err(SeriesError::AlphabetMismatch(self.n, o.n));
        }
        Ok(())
    }

    fn join(&self, o: &Self) -> Self {
        Self::zero(
            self.n,
            self.uses_y || o.uses_y,
            self.degree_cap.min(o.degree_cap),
        )
    }

    pub fn add(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(o)?;
        let mut s = self.join(o);
        for (w, c) in self.terms.iter().chain(&o.terms) {
            s.add_term(w.clone(), c.clone());
        }
        Ok(s)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, SeriesError> {
        self.add(&o.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, self.degree_cap);
        for (w, d) in &self.terms {
            s.add_term(w.clone(), d.clone() * c.clone());
        }
        s
    }

    pub fn mul(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(o)?;
        let mut s = self.join(o);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a.len() + b.len() > s.degree_cap {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                s.add_term(w, ca.clone() * cb.clone());
            }
        }
        Ok(s)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.n, self.uses_y, self.degree_cap);
        for _ in 0..k {
            acc = acc.mul(self).expect("same alphabet");
        }
        acc
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, o: &Self) -> Result<Self, SeriesError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).min()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&Vec::new())
    }

    /// Degree-`d` homogeneous part.
    pub fn homogeneous(&self, d: usize) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, self.degree_cap);
        for (w, c) in self.terms.iter().filter(|(w, _)| w.len() == d) {
            s.add_term(w.clone(), c.clone());
        }
        s
    }

    /// Free cyclic derivative with respect to `letter`: for each occurrence,
    /// the rest of the monomial read cyclically from just after it.
    pub fn cyclic_derivative(&self, letter: Letter) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, self.degree_cap.saturating_sub(1));
        for (w, c) in &self.terms {
            for (i, &l) in w.iter().enumerate() {
                if l == letter {
                    let mut d: Vec<Letter> = w[i + 1..].to_vec();
                    d.extend_from_slice(&w[..i]);
                    s.add_term(d, c.clone());
                }
            }
        }
        s
    }

    /// Each monomial replaced by its least rotation, merging equal classes.
    /// Two series agree modulo commutators iff their normal forms agree.
    pub fn cyclic_normal_form(&self) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, self.degree_cap);
        for (w, c) in &self.terms {
            s.add_term(least_rotation(w), c.clone());
        }
        s
    }

    pub fn cyclically_equivalent(&self, o: &Self) -> bool {
        self.n == o.n && self.cyclic_normal_form().terms == o.cyclic_normal_form().terms
    }

    /// The projection `y_i -> x_i` on letters.
    pub fn pi_letter(&self, l: Letter) -> Letter {
        if (l as usize) >= self.n {
            l - self.n as Letter
        } else {
            l
        }
    }

    pub fn pi(&self) -> Self {
        let mut s = Self::zero(self.n, false, self.degree_cap);
        for (w, c) in &self.terms {
            s.add_term(w.iter().map(|&l| self.pi_letter(l)).collect(), c.clone());
        }
        s
    }

    /// Substitutes each letter by a series. Images without constant terms
    /// keep truncation sound.
    pub fn compose(&self, images: &[FreeSeries<C>]) -> Result<Self, SeriesError> {
        assert_eq!(images.len(), self.alphabet_size(), "one image per letter");
        let target = images.first().map(|i| (i.n, i.uses_y, i.degree_cap));
        let (tn, ty, tc) = target.unwrap_or((self.n, self.uses_y, self.degree_cap));
        let mut out = Self::zero(tn, ty, tc);
        for img in images {
            if img.has_constant_term() {
                return Err(SeriesError::ConstantTerm);
            }
        }
        for (w, c) in &self.terms {
            let mut acc = Self::monomial(tn, ty, tc, Vec::new(), c.clone());
            for &l in w {
                acc = acc.mul(&images[l as usize])?;
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Admissible monomial: length at least 2 and, after `pi`, cyclically
    /// consecutive letters differ.
    pub fn is_admissible_monomial(&self, w: &[Letter]) -> bool {
        if w.len() < 2 {
            return false;
        }
        (0..w.len()).all(|s| self.pi_letter(w[s]) != self.pi_letter(w[(s + 1) % w.len()]))
    }

    pub fn is_admissible(&self) -> bool {
        self.terms.keys().all(|w| self.is_admissible_monomial(w))
    }

    /// Keeps only the admissible monomials.
    pub fn reduce(&self) -> Self {
        let mut s = Self::zero(self.n, self.uses_y, self.degree_cap);
        for (w, c) in self
            .terms
            .iter()
            .filter(|(w, _)| self.is_admissible_monomial(w))
        {
            s.add_term(w.clone(), c.clone());
        }
        s
    }

    pub fn letter_name(&self, l: Letter) -> String {
        if (l as usize) < self.n {
            format!("x{}", l + 1)
        } else {
            format!("y{}", l as usize - self.n + 1)
        }
    }

    pub fn parse_letter(&self, s: &str) -> Result<Letter, SeriesError> {
        let bad = || SeriesError::UnknownLetter(s.to_string());
        let (kind, idx) = s.split_at(1.min(s.len()));
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > self.n {
            return Err(bad());
        }
        match kind {
            "x" => Ok((i - 1) as Letter),
            "y" if self.uses_y => Ok((self.n + i - 1) as Letter),
            _ => Err(bad()),
        }
    }

    pub fn word_string(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&l| self.letter_name(l))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Least rotation of a word (lexicographic).
pub fn least_rotation<T: Ord + Clone>(w: &[T]) -> Vec<T> {
    let mut best = w.to_vec();
    for k in 1..w.len() {
        let mut r = w[k..].to_vec();
        r.extend_from_slice(&w[..k]);
        if r < best {
            best = r;
        }
    }
    best
}

impl<C: Coeff> fmt::Debug for FreeSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for FreeSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{}", self.word_string(w)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
