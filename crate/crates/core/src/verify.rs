//! Verification pipeline (under construction).
