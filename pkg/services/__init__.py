# services package

