//! Memoized `(n, k)` triangles of the three polynomial families.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use crate::bell::{build_bell_poly, FamilyError};
use crate::poly::LaurentPoly;
use crate::stirling_lah::{build_lah_poly, build_stirling_first_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Partial Bell polynomials `B_{n,k}`.
    Bell,
    /// Multivariate Stirling polynomials of the first kind `A_{n,k}`.
    StirlingFirst,
    /// Multivariable Lah polynomials `L_{n,k}`.
    Lah,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Bell => "B",
            Family::StirlingFirst => "A",
            Family::Lah => "L",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        match tag {
            "B" => Some(Family::Bell),
            "A" => Some(Family::StirlingFirst),
            "L" => Some(Family::Lah),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Lazily filled store of one family. Entries never change once written, so
/// a racing fill only duplicates work.
#[derive(Debug)]
pub struct TriangleTable {
    family: Family,
    entries: RwLock<BTreeMap<(usize, usize), Arc<LaurentPoly>>>,
}

impl TriangleTable {
    pub fn new(family: Family) -> Self {
        TriangleTable {
            family,
            entries: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn get(&self, n: usize, k: usize) -> Option<Arc<LaurentPoly>> {
        self.entries.read().unwrap().get(&(n, k)).cloned()
    }

    /// Store an entry, replacing whatever was there.
    pub fn insert(&self, n: usize, k: usize, poly: LaurentPoly) {
        self.entries.write().unwrap().insert((n, k), Arc::new(poly));
    }

    fn get_or_try_fill<F>(&self, n: usize, k: usize, build: F) -> Result<Arc<LaurentPoly>, FamilyError>
    where
        F: FnOnce() -> Result<LaurentPoly, FamilyError>,
    {
        if let Some(p) = self.get(n, k) {
            return Ok(p);
        }
        // built without the lock held: builders recurse into other cells
        let built = Arc::new(build()?);
        let mut entries = self.entries.write().unwrap();
        Ok(entries.entry((n, k)).or_insert(built).clone())
    }

    /// Snapshot of everything computed so far, in `(n, k)` order.
    pub fn snapshot(&self) -> Vec<((usize, usize), Arc<LaurentPoly>)> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|(key, p)| (*key, p.clone()))
            .collect()
    }
}

/// The B, A and L triangles together, since A and L are built from B.
#[derive(Debug)]
pub struct Families {
    bell: TriangleTable,
    stirling: TriangleTable,
    lah: TriangleTable,
}

static SHARED: LazyLock<Families> = LazyLock::new(Families::new);

impl Default for Families {
    fn default() -> Self {
        Self::new()
    }
}

impl Families {
    pub fn new() -> Self {
        Families {
            bell: TriangleTable::new(Family::Bell),
            stirling: TriangleTable::new(Family::StirlingFirst),
            lah: TriangleTable::new(Family::Lah),
        }
    }

    /// Process-wide tables used by the free functions.
    pub fn shared() -> &'static Families {
        &SHARED
    }

    pub fn table(&self, family: Family) -> &TriangleTable {
        match family {
            Family::Bell => &self.bell,
            Family::StirlingFirst => &self.stirling,
            Family::Lah => &self.lah,
        }
    }

    /// `B_{n,k}`, `0 <= k <= n`.
    pub fn bell(&self, n: usize, k: usize) -> Result<Arc<LaurentPoly>, FamilyError> {
        if k > n {
            return Err(FamilyError::Range { n, k });
        }
        self.bell.get_or_try_fill(n, k, || build_bell_poly(n, k))
    }

    /// `A_{n,k}`, `1 <= k <= n`.
    pub fn stirling_first(&self, n: usize, k: usize) -> Result<Arc<LaurentPoly>, FamilyError> {
        if k == 0 || k > n {
            return Err(FamilyError::Range { n, k });
        }
        self.stirling
            .get_or_try_fill(n, k, || build_stirling_first_poly(self, n, k))
    }

    /// `L_{n,k}`, `1 <= k <= n`.
    pub fn lah(&self, n: usize, k: usize) -> Result<Arc<LaurentPoly>, FamilyError> {
        if k == 0 || k > n {
            return Err(FamilyError::Range { n, k });
        }
        self.lah.get_or_try_fill(n, k, || build_lah_poly(self, n, k))
    }

    pub fn get(&self, family: Family, n: usize, k: usize) -> Result<Arc<LaurentPoly>, FamilyError> {
        match family {
            Family::Bell => self.bell(n, k),
            Family::StirlingFirst => self.stirling_first(n, k),
            Family::Lah => self.lah(n, k),
        }
    }

    /// Fill every `1 <= k <= n <= max_n` cell of `family`, in order.
    pub fn populate(&self, family: Family, max_n: usize) -> Result<(), FamilyError> {
        for n in 1..=max_n {
            for k in 1..=n {
                self.get(family, n, k)?;
            }
        }
        Ok(())
    }

    /// Rows `1 <= k <= n <= max_n` of `family`, in `(n, k)` order.
    pub fn triangle(
        &self,
        family: Family,
        max_n: usize,
    ) -> Result<Vec<(usize, usize, Arc<LaurentPoly>)>, FamilyError> {
        let mut rows = Vec::new();
        for n in 1..=max_n {
            for k in 1..=n {
                rows.push((n, k, self.get(family, n, k)?));
            }
        }
        Ok(rows)
    }
}
