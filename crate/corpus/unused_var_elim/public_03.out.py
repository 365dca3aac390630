def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
width = 8
height = 3
print(width * height)
