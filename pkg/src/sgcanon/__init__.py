"""Canonical labelling of site graphs via rigid edge-coloured digraphs."""
