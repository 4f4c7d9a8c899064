//! The face-by-face case analysis. Every rule is written for the fixed
//! palette of its statement; `Palette` maps those colors onto the actual
//! colors of the precolored vertices.

use std::collections::{BTreeMap, BTreeSet};

use graph_core::Graph;

use crate::blocks::ear_path;
use crate::OuterplanarError;

/// Which branch of the path rule colored an ear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathCase {
    /// Distinct C and distinct U at the endpoints.
    Distinct,
    /// Equal U, triangle whose apex has no further face.
    ApexAlone,
    /// Equal U, triangle with one apex edge on no further face.
    ApexFreeEdge,
    /// Equal U, triangle next to a non-triangular face that was colored too.
    ApexBigFace { face: Vec<usize> },
    /// Equal U, triangle between triangles on x and y, with z on {x, v3}.
    ApexTriangles { x: usize, y: usize, z: usize },
    /// Equal U, triangle between triangles on x and y; {x, v3} handed on.
    ApexTrianglesHandOff { x: usize, y: usize },
    /// Equal U, square whose middle edge carries a triangle with x.
    SquareTriangle { x: usize },
    /// Equal U, square; the middle edge keeps equal colors.
    SquareHandOff,
    Pentagon,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpStep {
    /// Root block is a bridge.
    RootBridge { v: usize, w: usize },
    /// Bridge hanging off the colored cut vertex `v`.
    Bridge { v: usize, w: usize },
    /// Root block with only pentagons: first face.
    FiveFirst { face: Vec<usize> },
    /// Root block with only pentagons: ear handled by configuration 1 to 4.
    FiveEar { face: Vec<usize>, config: u8 },
    /// Uncolored face with a size other than five.
    Fresh { face: Vec<usize> },
    /// Face through the colored cut vertex `v`.
    OnePrecolored { face: Vec<usize>, v: usize },
    /// Face on an edge whose ends share C but differ in U.
    SameColor { face: Vec<usize>, edge: (usize, usize) },
    /// Ear colored by the path rule on the colored edge `base`.
    Path { face: Vec<usize>, base: (usize, usize), case: PathCase },
}

/// Canonical color (1..=4) to actual color.
#[derive(Clone, Copy, Debug)]
struct Palette([u32; 5]);

impl Palette {
    fn identity() -> Self {
        Palette([0, 1, 2, 3, 4])
    }

    fn new(fixed: &[(u32, u32)]) -> Result<Self, OuterplanarError> {
        let mut map = [0u32; 5];
        let mut used = [false; 5];
        for &(c, a) in fixed {
            if map[c as usize] == a {
                continue;
            }
            if map[c as usize] != 0 || used[a as usize] {
                return Err(internal(format!("palette clash on canonical color {c}")));
            }
            map[c as usize] = a;
            used[a as usize] = true;
        }
        let mut free = (1..=4u32).filter(|&a| !used[a as usize]);
        for slot in map.iter_mut().skip(1) {
            if *slot == 0 {
                *slot = free.next().unwrap();
            }
        }
        Ok(Palette(map))
    }
}

fn internal(msg: impl Into<String>) -> OuterplanarError {
    OuterplanarError::Internal(msg.into())
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Faces of one block and which of them are colored.
pub(crate) struct BlockCtx {
    pub faces: Vec<Vec<usize>>,
    pub by_edge: BTreeMap<(usize, usize), Vec<usize>>,
    pub done: Vec<bool>,
}

impl BlockCtx {
    /// Uncolored face on edge {a, b} other than `not`.
    fn open_face(&self, a: usize, b: usize, not: usize) -> Option<usize> {
        self.by_edge.get(&key(a, b))?.iter().copied().find(|&h| h != not && !self.done[h])
    }

    fn has_other_face(&self, a: usize, b: usize, not: usize) -> bool {
        self.by_edge.get(&key(a, b)).is_some_and(|v| v.iter().any(|&h| h != not))
    }

    fn pending(&self, a: usize, b: usize) -> bool {
        self.by_edge.get(&key(a, b)).is_some_and(|v| v.iter().any(|&h| !self.done[h]))
    }

    fn third(&self, f: usize, a: usize, b: usize) -> usize {
        *self.faces[f].iter().find(|&&x| x != a && x != b).unwrap()
    }
}

pub(crate) struct Painter<'g> {
    g: &'g Graph,
    pub c: Vec<Option<u32>>,
    pub u: Vec<Option<u32>>,
    pub steps: Vec<OpStep>,
    pub exempt: BTreeSet<(usize, usize)>,
    fresh: Vec<usize>,
}

impl<'g> Painter<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Painter { g, c: vec![None; g.n()], u: vec![None; g.n()], steps: Vec::new(), exempt: BTreeSet::new(), fresh: Vec::new() }
    }

    fn cu(&self, v: usize) -> Result<(u32, u32), OuterplanarError> {
        match (self.c[v], self.u[v]) {
            (Some(c), Some(u)) => Ok((c, u)),
            _ => Err(internal(format!("vertex {} expected to be colored", v + 1))),
        }
    }

    fn set(&mut self, p: Palette, v: usize, c: u32, u: u32) -> Result<(), OuterplanarError> {
        if self.c[v].is_some() {
            return Err(internal(format!("vertex {} colored twice", v + 1)));
        }
        self.c[v] = Some(p.0[c as usize]);
        self.u[v] = Some(p.0[u as usize]);
        self.fresh.push(v);
        Ok(())
    }

    /// Checks the invariants around the vertices colored since the last
    /// call. With `star`, an edge failing the star condition must have no
    /// uncolored face left; such edges are logged as exempt.
    pub fn audit(&mut self, ctx: Option<&BlockCtx>, star: bool) -> Result<(), OuterplanarError> {
        let fresh = std::mem::take(&mut self.fresh);
        let mut touched: BTreeSet<usize> = BTreeSet::new();
        for &x in &fresh {
            let (cx, ux) = self.cu(x)?;
            if cx == ux {
                return Err(internal(format!("vertex {} has C = U", x + 1)));
            }
            touched.insert(x);
            for &y in self.g.neighbors(x) {
                let Some(cy) = self.c[y] else { continue };
                touched.insert(y);
                let uy = self.u[y].unwrap();
                let distinct: BTreeSet<u32> = [cx, ux, cy, uy].into_iter().collect();
                if star && (cx == cy || distinct.len() != 3) {
                    if ctx.is_some_and(|c| c.pending(x, y)) {
                        return Err(internal(format!("edge {}-{} breaks the star condition but still has an open face", x + 1, y + 1)));
                    }
                    self.exempt.insert(key(x, y));
                }
            }
        }
        for &y in &touched {
            let uy = self.u[y].unwrap();
            let k = self.g.neighbors(y).iter().filter(|&&z| self.c[z] == Some(uy)).count();
            if k != 1 {
                return Err(internal(format!("vertex {} sees its unique color {} times", y + 1, k)));
            }
        }
        Ok(())
    }

    pub fn root_bridge(&mut self, v: usize, w: usize) -> Result<(), OuterplanarError> {
        let p = Palette::identity();
        self.set(p, v, 1, 2)?;
        self.set(p, w, 2, 1)?;
        self.steps.push(OpStep::RootBridge { v, w });
        Ok(())
    }

    pub fn bridge(&mut self, v: usize, w: usize) -> Result<(), OuterplanarError> {
        let (cv, uv) = self.cu(v)?;
        let p = Palette::new(&[(1, cv), (2, uv)])?;
        self.set(p, w, 3, 1)?;
        self.steps.push(OpStep::Bridge { v, w });
        Ok(())
    }

    /// Colors a whole face with the 1,2,3 pattern and its patch-ups.
    pub fn fresh_face(&mut self, ctx: &mut BlockCtx, f: usize) -> Result<(), OuterplanarError> {
        let vs = ctx.faces[f].clone();
        let k = vs.len();
        if k == 5 {
            return Err(internal("the fresh-face rule does not apply to pentagons"));
        }
        let mut cc: Vec<u32> = (0..k).map(|i| i as u32 % 3 + 1).collect();
        match k % 3 {
            1 => cc[k - 1] = 4,
            2 => cc[k - 4..].copy_from_slice(&[4, 2, 3, 4]),
            _ => {}
        }
        let p = Palette::identity();
        for i in 0..k {
            self.set(p, vs[i], cc[i], cc[(i + 1) % k])?;
        }
        ctx.done[f] = true;
        self.steps.push(OpStep::Fresh { face: vs });
        Ok(())
    }

    /// Colors face `f` around its only colored vertex `v`.
    pub fn one_precolored(&mut self, ctx: &mut BlockCtx, f: usize, v: usize) -> Result<(), OuterplanarError> {
        let mut vs = ctx.faces[f].clone();
        let at = vs.iter().position(|&x| x == v).ok_or_else(|| internal("cut vertex not on its face"))?;
        vs.rotate_left(at);
        if vs[1..].iter().any(|&x| self.c[x].is_some()) {
            return Err(internal("face has more than one colored vertex"));
        }
        let (cv, uv) = self.cu(v)?;
        let p = Palette::new(&[(1, cv), (2, uv)])?;
        let k = vs.len();
        if k == 3 {
            self.set(p, vs[1], 3, 1)?;
            self.set(p, vs[2], 4, 1)?;
        } else {
            let mut cc = vec![1, 3, 2];
            for i in 3..k {
                cc.push(cc[i - 3]);
            }
            if k % 3 == 2 {
                cc[k - 2] = 4;
            } else {
                cc[k - 1] = 4;
            }
            for i in 1..k {
                self.set(p, vs[i], cc[i], cc[(i + 1) % k])?;
            }
        }
        ctx.done[f] = true;
        self.steps.push(OpStep::OnePrecolored { face: vs, v });
        Ok(())
    }

    /// Writes canonical colors onto labels 3..=k of the face
    /// v2 - v3 - ... - vk - v1; `cc[1]` stands in for v1 as the successor of vk.
    fn write_path(&mut self, p: Palette, lab: &[usize], cc: &[u32], u: Option<&[u32]>) -> Result<(), OuterplanarError> {
        let k = lab.len() - 1;
        for i in 3..=k {
            let ui = match u {
                Some(u) => u[i],
                None => cc[if i == k { 1 } else { i + 1 }],
            };
            self.set(p, lab[i], cc[i], ui)?;
        }
        Ok(())
    }

    /// Face on edge {a, b} whose ends share C and differ in U.
    pub fn same_color(&mut self, ctx: &mut BlockCtx, f: usize, a: usize, b: usize) -> Result<(), OuterplanarError> {
        let (v2, inner, v1) = ear_path(&ctx.faces[f], a, b);
        let (c1, u1) = self.cu(v1)?;
        let (c2, u2) = self.cu(v2)?;
        if c1 != c2 || u1 == u2 {
            return Err(internal("equal-color rule needs equal C and distinct U"));
        }
        let k = inner.len() + 2;
        let p = Palette::new(&[(4, c1), (1, u1), (2, u2)])?;
        let lab = labels(v1, v2, &inner);
        let mut cc = vec![0, 4, 4];
        match k {
            3 => return Err(internal("equal-color rule needs a face with at least four vertices")),
            4 => {
                cc.extend([1, 3]);
                self.write_path(p, &lab, &cc, Some(&[0, 0, 0, 4, 4]))?;
            }
            5 => {
                cc.extend([1, 2, 3]);
                self.write_path(p, &lab, &cc, None)?;
            }
            _ => {
                cc.extend([3, 2]);
                for i in 5..=k {
                    cc.push(cc[i - 3]);
                }
                match k % 3 {
                    0 => cc[k - 1] = 1,
                    2 => {
                        cc[k - 1] = 1;
                        cc[k] = 2;
                    }
                    _ => {}
                }
                self.write_path(p, &lab, &cc, None)?;
            }
        }
        ctx.done[f] = true;
        self.steps.push(OpStep::SameColor { face: ctx.faces[f].clone(), edge: (a, b) });
        Ok(())
    }

    /// Colors the ear of face `f` on the colored edge {a, b}.
    pub fn path(&mut self, ctx: &mut BlockCtx, f: usize, a: usize, b: usize) -> Result<(), OuterplanarError> {
        let (mut v2, mut inner, mut v1) = ear_path(&ctx.faces[f], a, b);
        let (c1, u1) = self.cu(v1)?;
        let (c2, u2) = self.cu(v2)?;
        let k = inner.len() + 2;
        if c1 == c2 {
            if u1 != u2 && k >= 4 {
                return self.same_color(ctx, f, a, b);
            }
            return Err(internal(format!("edge {}-{} has an illegal endpoint configuration", a + 1, b + 1)));
        }
        let face = ctx.faces[f].clone();
        if u1 != u2 {
            let distinct: BTreeSet<u32> = [c1, u1, c2, u2].into_iter().collect();
            if distinct.len() != 3 {
                return Err(internal(format!("edge {}-{} has an illegal endpoint configuration", a + 1, b + 1)));
            }
            if u1 != c2 {
                flip(&mut v1, &mut v2, &mut inner);
            }
            let (c1, _) = self.cu(v1)?;
            let (c2, u2) = self.cu(v2)?;
            let p = Palette::new(&[(1, c1), (2, c2), (3, u2)])?;
            let lab = labels(v1, v2, &inner);
            match k {
                3 => self.set(p, lab[3], 4, 2)?,
                4 => {
                    self.set(p, lab[3], 4, 3)?;
                    self.set(p, lab[4], 3, 1)?;
                }
                _ => {
                    let mut cc = vec![0, 1, 2, 1, 3, 4];
                    for i in 6..=k {
                        cc.push(cc[i - 3]);
                    }
                    match k % 3 {
                        0 => {
                            cc[k - 1] = 2;
                            cc[k] = 4;
                        }
                        1 => cc[k - 1] = 2,
                        _ => {}
                    }
                    self.write_path(p, &lab, &cc, None)?;
                }
            }
            ctx.done[f] = true;
            self.steps.push(OpStep::Path { face, base: (a, b), case: PathCase::Distinct });
            return Ok(());
        }

        // equal U from here on
        let case = match k {
            3 => {
                let v3 = inner[0];
                let other1 = ctx.has_other_face(v1, v3, f);
                let other2 = ctx.has_other_face(v2, v3, f);
                let big = |ctx: &BlockCtx, x: usize, y: usize| ctx.open_face(x, y, f).filter(|&h| ctx.faces[h].len() != 3);
                if !other1 && !other2 {
                    let p = self.case2_palette(v1, v2)?;
                    self.set(p, v3, 4, 2)?;
                    PathCase::ApexAlone
                } else if !other1 || !other2 {
                    if other2 {
                        flip(&mut v1, &mut v2, &mut inner);
                    }
                    let p = self.case2_palette(v1, v2)?;
                    self.set(p, v3, 4, 1)?;
                    PathCase::ApexFreeEdge
                } else if big(ctx, v2, v3).is_some() || big(ctx, v1, v3).is_some() {
                    if big(ctx, v2, v3).is_none() {
                        flip(&mut v1, &mut v2, &mut inner);
                    }
                    let h = big(ctx, v2, v3).unwrap();
                    let p = self.case2_palette(v1, v2)?;
                    self.set(p, v3, 4, 1)?;
                    self.big_face(ctx, p, h, v3, v2)?;
                    PathCase::ApexBigFace { face: ctx.faces[h].clone() }
                } else {
                    let f1 = ctx.open_face(v1, v3, f).ok_or_else(|| internal("missing triangle on {v1, v3}"))?;
                    let f2 = ctx.open_face(v2, v3, f).ok_or_else(|| internal("missing triangle on {v2, v3}"))?;
                    let x = ctx.third(f1, v1, v3);
                    let y = ctx.third(f2, v2, v3);
                    let p = self.case2_palette(v1, v2)?;
                    let zf = ctx.open_face(x, v3, f1);
                    ctx.done[f1] = true;
                    ctx.done[f2] = true;
                    match zf {
                        Some(h) if ctx.faces[h].len() == 3 => {
                            let z = ctx.third(h, x, v3);
                            self.set(p, v3, 1, 4)?;
                            self.set(p, x, 2, 3)?;
                            self.set(p, y, 4, 2)?;
                            self.set(p, z, 3, 1)?;
                            ctx.done[h] = true;
                            PathCase::ApexTriangles { x, y, z }
                        }
                        _ => {
                            self.set(p, v3, 4, 2)?;
                            self.set(p, x, 4, 1)?;
                            self.set(p, y, 1, 2)?;
                            ctx.done[f] = true;
                            self.steps.push(OpStep::Path { face, base: (a, b), case: PathCase::ApexTrianglesHandOff { x, y } });
                            if let Some(h) = zf {
                                self.same_color(ctx, h, x, v3)?;
                            }
                            return Ok(());
                        }
                    }
                }
            }
            4 => {
                let p = self.case2_palette(v1, v2)?;
                let (v3, v4) = (inner[0], inner[1]);
                let h = ctx.open_face(v3, v4, f);
                match h {
                    Some(h) if ctx.faces[h].len() == 3 => {
                        let x = ctx.third(h, v3, v4);
                        // U(v4) = 1 would repeat (v3 and v1 both carry 1); the
                        // star condition on {v2,v3}, {v4,v1}, {v3,x}, {v4,x}
                        // then forces these witnesses
                        self.set(p, v3, 1, 2)?;
                        self.set(p, v4, 4, 3)?;
                        self.set(p, x, 3, 1)?;
                        ctx.done[h] = true;
                        PathCase::SquareTriangle { x }
                    }
                    _ => {
                        self.set(p, v3, 4, 2)?;
                        self.set(p, v4, 4, 1)?;
                        ctx.done[f] = true;
                        self.steps.push(OpStep::Path { face, base: (a, b), case: PathCase::SquareHandOff });
                        if let Some(h) = h {
                            self.same_color(ctx, h, v3, v4)?;
                        }
                        return Ok(());
                    }
                }
            }
            5 => {
                let p = self.case2_palette(v1, v2)?;
                let lab = labels(v1, v2, &inner);
                self.write_path(p, &lab, &[0, 1, 2, 1, 3, 2], Some(&[0, 0, 0, 3, 2, 1]))?;
                PathCase::Pentagon
            }
            _ => {
                let p = self.case2_palette(v1, v2)?;
                let lab = labels(v1, v2, &inner);
                let mut cc = vec![0, 1, 2, 4, 3];
                for i in 5..=k {
                    cc.push(cc[i - 3]);
                }
                if k % 3 == 1 {
                    cc[k - 2] = 1;
                    cc[k] = 2;
                }
                self.write_path(p, &lab, &cc, None)?;
                PathCase::Long
            }
        };
        ctx.done[f] = true;
        self.steps.push(OpStep::Path { face, base: (a, b), case });
        Ok(())
    }

    fn case2_palette(&self, v1: usize, v2: usize) -> Result<Palette, OuterplanarError> {
        let (c1, u1) = self.cu(v1)?;
        let (c2, _) = self.cu(v2)?;
        Palette::new(&[(1, c1), (2, c2), (3, u1)])
    }

    /// The non-triangular face v3 - w1 - ... - w_{k-2} - v2 colored along
    /// with the apex v3.
    fn big_face(&mut self, ctx: &mut BlockCtx, p: Palette, h: usize, v3: usize, v2: usize) -> Result<(), OuterplanarError> {
        let (s, mut w, _) = ear_path(&ctx.faces[h], v3, v2);
        if s != v3 {
            w.reverse();
        }
        let k = w.len() + 2;
        // 1-based: cw[i] is the color of w_i
        let mut cw = vec![0, 3, 1, 4];
        for i in 4..=k - 2 {
            cw.push(cw[i - 3]);
        }
        cw.truncate(k - 1);
        if k % 3 == 0 {
            cw[k - 4] = 2;
            cw[k - 3] = 1;
            cw[k - 2] = 4;
        }
        for i in 1..=k - 2 {
            let ui = if k == 6 {
                [0, 4, 3, 2, 2][i]
            } else if i <= k - 3 {
                cw[i + 1]
            } else {
                2
            };
            self.set(p, w[i - 1], cw[i], ui)?;
        }
        ctx.done[h] = true;
        Ok(())
    }

    pub fn five_first(&mut self, ctx: &mut BlockCtx, f: usize) -> Result<(), OuterplanarError> {
        let vs = ctx.faces[f].clone();
        if vs.len() != 5 {
            return Err(internal("three-color rule met a face that is not a pentagon"));
        }
        let p = Palette::identity();
        for (i, (c, u)) in [(1, 3), (1, 2), (2, 1), (2, 3), (3, 1)].into_iter().enumerate() {
            self.set(p, vs[i], c, u)?;
        }
        ctx.done[f] = true;
        self.steps.push(OpStep::FiveFirst { face: vs });
        Ok(())
    }

    /// Pentagon ear w1 - w2 - w3 - w4 - w5 on the colored edge {w1, w2}.
    pub fn five_ear(&mut self, ctx: &mut BlockCtx, f: usize, a: usize, b: usize) -> Result<(), OuterplanarError> {
        let (mut w2, mut inner, mut w1) = ear_path(&ctx.faces[f], a, b);
        if inner.len() != 3 {
            return Err(internal("three-color rule met a face that is not a pentagon"));
        }
        let (c1, u1) = self.cu(w1)?;
        let (c2, u2) = self.cu(w2)?;
        let distinct: BTreeSet<u32> = [c1, u1, c2, u2].into_iter().collect();
        let (config, p, assign) = if c1 == c2 && u1 == u2 {
            (4, Palette::new(&[(1, c1), (2, u1)])?, [(1, 2), (2, 3), (3, 1)])
        } else if c1 == c2 && distinct.len() == 3 {
            (1, Palette::new(&[(1, c1), (2, u1), (3, u2)])?, [(2, 1), (2, 3), (3, 1)])
        } else if c1 != c2 && c1 == u2 && c2 == u1 {
            (3, Palette::new(&[(1, c1), (2, c2)])?, [(2, 3), (3, 2), (1, 3)])
        } else if c1 != c2 && u1 != u2 && distinct.len() == 3 {
            if u1 != c2 {
                std::mem::swap(&mut w1, &mut w2);
                inner.reverse();
            }
            let (c1, _) = self.cu(w1)?;
            let (c2, u2) = self.cu(w2)?;
            (2, Palette::new(&[(1, c1), (2, c2), (3, u2)])?, [(1, 2), (3, 1), (3, 1)])
        } else {
            return Err(internal(format!(
                "pentagon ear on {}-{} meets a fifth endpoint configuration",
                a + 1,
                b + 1
            )));
        };
        for (i, &(c, u)) in assign.iter().enumerate() {
            self.set(p, inner[i], c, u)?;
        }
        ctx.done[f] = true;
        self.steps.push(OpStep::FiveEar { face: ctx.faces[f].clone(), config });
        Ok(())
    }
}

fn flip(v1: &mut usize, v2: &mut usize, inner: &mut [usize]) {
    std::mem::swap(v1, v2);
    inner.reverse();
}

/// `lab[i]` is vertex v_i of the face v2 - v3 - ... - vk - v1; index 0 unused.
fn labels(v1: usize, v2: usize, inner: &[usize]) -> Vec<usize> {
    let mut lab = vec![usize::MAX, v1, v2];
    lab.extend_from_slice(inner);
    lab
}
