def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def is_hex_color(text):
    if len(text) == 7:
        if text[0] == '#':
            return True
    return False
# probe: is_hex_color('#a0b1c2')
# probe: is_hex_color('a0b1c2x')
# probe: is_hex_color('#abc')
