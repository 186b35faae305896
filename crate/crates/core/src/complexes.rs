//! CW 2-complexes (under construction).
