use std::fmt;

use thiserror::Error;

/// Grid location of a fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    /// Index into the padded 1D array.
    Line(usize),
    /// `(i, j)` into the padded 2D array.
    Grid(usize, usize),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Line(i) => write!(f, "{i}"),
            Cell::Grid(i, j) => write!(f, "({i}, {j})"),
        }
    }
}

/// A state the flux evaluation cannot accept.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFault {
    pub cell: Cell,
    /// Conserved variables at the cell.
    pub state: Vec<f64>,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("unphysical state at step {step}, cell {}: {} {:?}", fault.cell, fault.reason, fault.state)]
    Unphysical { step: usize, fault: StateFault },
    #[error("solution blow-up at step {step}")]
    BlowUp { step: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl SolverError {
    pub fn step(&self) -> Option<usize> {
        match self {
            SolverError::Unphysical { step, .. } | SolverError::BlowUp { step } => Some(*step),
            SolverError::Config(_) => None,
        }
    }

    /// Multi-line `key=value` report.
    pub fn report(&self) -> String {
        match self {
            SolverError::Unphysical { step, fault } => {
                let state: Vec<String> = fault.state.iter().map(|v| format!("{v:.16e}")).collect();
                format!(
                    "failure=unphysical\nstep={step}\ncell={}\nreason={}\nstate={}\n",
                    fault.cell,
                    fault.reason,
                    state.join(",")
                )
            }
            SolverError::BlowUp { step } => format!("failure=blow-up\nstep={step}\n"),
            SolverError::Config(msg) => format!("failure=config\nmessage={msg}\n"),
        }
    }
}
