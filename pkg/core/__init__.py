# core package

