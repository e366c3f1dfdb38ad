# tests package

