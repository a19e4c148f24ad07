package zoo.web;

import zoo.core.Feedable;

public class Page {
    private String title;
    private int visits;

    public Page(String title) {
        this.title = title;
    }

    /* Rendering walks the title twice:
       once to measure, once to emit. */
    public String render() {
        StringBuilder out = new StringBuilder();
        int i = 0;
        while (i < title.length()) {
            out.append(title.charAt(i));
            i++;
        }
        do {
            visits++;
        } while (visits < 1);
        return out.toString();
    }

    public Feedable mascotFeeder() {
        return new Feedable() {
            public void feed(int grams) {
                if (grams > 0) {
                    visits++;
                }
            }

            public boolean isHungry() {
                return visits % 2 == 1;
            }
        };
    }
}
