//! Family closures (under construction).
