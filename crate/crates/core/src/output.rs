//! CSV emitters. Reals use the shortest representation that reads back to
//! the same `f64`, so no digits are lost.

use std::io::{self, Write};

use crate::convergence::ConvergenceReport;
use crate::trajectory::Trajectory;

/// `t,x,y` (or `t,x1,..,xd` for other dimensions), one row per node.
pub fn write_trajectory<W: Write>(mut w: W, traj: &Trajectory) -> io::Result<()> {
    if traj.dimension() == 2 {
        writeln!(w, "t,x,y")?;
    } else {
        let cols: Vec<String> = (1..=traj.dimension()).map(|i| format!("x{i}")).collect();
        writeln!(w, "t,{}", cols.join(","))?;
    }
    for (t, s) in traj.times().iter().zip(traj.states()) {
        write!(w, "{t}")?;
        for v in s {
            write!(w, ",{v}")?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// `x,y` phase-plane points, every node, time omitted.
pub fn write_phase<W: Write>(mut w: W, traj: &Trajectory) -> io::Result<()> {
    if traj.dimension() < 2 {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "phase output needs at least two components",
        ));
    }
    writeln!(w, "x,y")?;
    for s in traj.states() {
        writeln!(w, "{},{}", s[0], s[1])?;
    }
    w.flush()
}

/// `N,tau,xi_x,xi_y,p_x,p_y`; absent orders are empty cells.
pub fn write_convergence<W: Write>(mut w: W, report: &ConvergenceReport) -> io::Result<()> {
    writeln!(w, "N,tau,xi_x,xi_y,p_x,p_y")?;
    let cell = |p: Option<f64>| p.map(|v| v.to_string()).unwrap_or_default();
    for row in &report.rows {
        if row.xi.len() < 2 {
            return Err(io::Error::new(
                io::ErrorKind::InvalidInput,
                "convergence table needs two components",
            ));
        }
        writeln!(
            w,
            "{},{},{},{},{},{}",
            row.steps,
            row.step_size,
            row.xi[0],
            row.xi[1],
            cell(row.order[0]),
            cell(row.order[1])
        )?;
    }
    w.flush()
}
