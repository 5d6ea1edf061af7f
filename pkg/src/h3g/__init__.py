"""Spanning trees and 3-Pfaffian orientations of 3-uniform hypergraphs."""

__version__ = "0.1.0"
