namespace bracelab {}
