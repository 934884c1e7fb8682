"""
Tests for chorbifold package
"""
