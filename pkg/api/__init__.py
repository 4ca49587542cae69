"""
Graph-phased Szegedy walk simulator package
"""
