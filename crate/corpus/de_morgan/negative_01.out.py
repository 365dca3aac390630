def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def outside(x, lo, hi):
    if not lo <= x or not x <= hi:
        return True
    return False
