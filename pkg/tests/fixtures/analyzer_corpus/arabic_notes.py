# العداد يبدأ من الصفر
counter = 0
