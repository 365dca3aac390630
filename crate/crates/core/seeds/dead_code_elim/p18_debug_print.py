def pick_larger(a, b):
    if a >= b:
        return a
    return b

def parse_pair(text):
    left, right = text.split(',')
    if False:
        print('left', left)
        print('right', right)
    return int(left) + int(right)
# probe: parse_pair('3,4')
