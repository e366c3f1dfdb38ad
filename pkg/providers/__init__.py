# providers package

