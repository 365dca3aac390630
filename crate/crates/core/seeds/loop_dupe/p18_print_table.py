def pick_larger(a, b):
    if a >= b:
        return a
    return b

def print_table(rows):
    for name, value in rows:
        print(name, value)
    return None
# probe: print_table([('a', 1), ('b', 2)])
